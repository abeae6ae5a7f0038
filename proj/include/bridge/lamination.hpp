#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bridge/mcg.hpp"
#include "bridge/triangulation.hpp"

namespace bridge {

using BigInt = boost::multiprecision::cpp_int;
// Normal coordinates: one transverse count per edge of the fixed triangulation.
using Weights = std::vector<BigInt>;

// Dynnikov coordinates (a_1..a_{2n-3}; b_1..b_{2n-3}); the serialized form
// of a lamination.
struct LamCoords {
    std::vector<BigInt> a;
    std::vector<BigInt> b;

    // "a: 0 1 ; b: -1 0"
    std::string to_string() const;
    static LamCoords parse(SurfaceSpec spec, const std::string& text);
    bool is_zero() const;

    bool operator==(const LamCoords&) const = default;
};

LamCoords to_dynnikov(SurfaceSpec spec, const Weights& w);
// Inverse of to_dynnikov; throws ConfigError when the vector is not realized.
Weights from_dynnikov(SurfaceSpec spec, const LamCoords& c);

// Corner counts are nonnegative integers in every triangle.
bool weights_valid(const Triangulation& T, const Weights& w);

Weights base_weights(SurfaceSpec spec, int i, int j);
// Boundary of a small disk around puncture p (1..2n).
Weights peripheral_weights(SurfaceSpec spec, int p);
Weights apply_generator(SurfaceSpec spec, const Weights& w, McgGenerator g);
Weights apply_word(SurfaceSpec spec, Weights w, const McgWord& word);
BigInt norm(const Weights& w);
bool is_essential(SurfaceSpec spec, const Weights& w);

class CurveClass {
public:
    // Curve given by normal coordinates alone; must be a single curve.
    static CurveClass from_weights(SurfaceSpec spec, Weights w);
    static CurveClass from_coords(SurfaceSpec spec, const LamCoords& c);
    // Curve with a known pi_1 word (e.g. the output of a surgery).
    static CurveClass with_word(SurfaceSpec spec, Weights w, Pi1Word word);

    const SurfaceSpec& spec() const { return spec_; }
    const Weights& weights() const { return weights_; }
    LamCoords coords() const { return to_dynnikov(spec_, weights_); }
    // Conjugacy class of the curve's loop; computed on demand.
    Pi1Word word() const;
    // The word h with c = h * base, when the curve came from base_curve.
    const std::optional<McgWord>& history() const { return history_; }
    std::optional<std::pair<int, int>> base() const { return base_; }
    // Recounts components of the traced curve.
    bool connected() const;

    bool same_curve(const CurveClass& o) const { return weights_ == o.weights_; }

private:
    friend CurveClass base_curve(SurfaceSpec, int, int, bool);
    friend CurveClass apply_generator(const CurveClass&, McgGenerator);
    friend CurveClass apply_word(const CurveClass&, const McgWord&);

    SurfaceSpec spec_;
    Weights weights_;
    std::optional<std::pair<int, int>> base_;
    std::optional<McgWord> history_;
    std::optional<Pi1Word> word_;
};

// Round curve around punctures i..j (1 <= i < j <= 2n-1). The pair
// (1, 2n-1) is peripheral to puncture 2n and needs allow_peripheral.
CurveClass base_curve(SurfaceSpec spec, int i, int j, bool allow_peripheral = false);
CurveClass apply_generator(const CurveClass& c, McgGenerator g);
CurveClass apply_word(const CurveClass& c, const McgWord& w);
bool is_essential(const CurveClass& c);
BigInt norm(const CurveClass& c);

// Conversion for tracing; throws when a weight exceeds the limit.
std::vector<long long> small_weights(const Weights& w, long long limit = 400000000LL);

}  // namespace bridge
