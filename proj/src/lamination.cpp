#include "bridge/lamination.hpp"

#include <sstream>

#include "bridge/errors.hpp"
#include "bridge/normal_curve.hpp"

namespace bridge {

namespace {

BigInt bmax(const BigInt& a, const BigInt& b) { return a < b ? b : a; }
BigInt babs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

int disk_m(SurfaceSpec spec) { return spec.disk_punctures(); }

// Views of the weight vector as e_i, u_k, d_k with u and d optionally
// exchanged (reflection in the axis).
struct View {
    const Triangulation& T;
    Weights& w;
    bool swap;
    BigInt& e(int i) { return w[T.axis(i)]; }
    BigInt& u(int k) { return w[swap ? T.down(k) : T.up(k)]; }
    BigInt& d(int k) { return w[swap ? T.up(k) : T.down(k)]; }
};

// beta_i: twice the count of arcs crossing the vertical line between
// punctures i and i+1.
BigInt beta(const Triangulation& T, const Weights& w, int i) {
    const BigInt& ui = w[T.up(i)];
    const BigInt& ui1 = w[T.up(i + 1)];
    const BigInt& di = w[T.down(i)];
    const BigInt& di1 = w[T.down(i + 1)];
    return (ui + ui1 + di + di1 + babs(ui - ui1 - di + di1)) / 2 - w[T.axis(i)];
}

}  // namespace

// ---- coordinates -----------------------------------------------------------

std::string LamCoords::to_string() const {
    std::ostringstream os;
    os << "a:";
    for (const auto& x : a) os << ' ' << x;
    os << " ; b:";
    for (const auto& x : b) os << ' ' << x;
    return os.str();
}

LamCoords LamCoords::parse(SurfaceSpec spec, const std::string& text) {
    const std::size_t len = spec.disk_punctures() - 2;
    auto semi = text.find(';');
    if (semi == std::string::npos) throw ConfigError("coordinates need 'a: ... ; b: ...'");
    auto part = [&](std::string s, const char* tag) {
        std::istringstream in(s);
        std::string head;
        in >> head;
        if (head != tag) throw ConfigError(std::string("expected '") + tag + "' in coordinates");
        std::vector<BigInt> out;
        std::string tok;
        while (in >> tok) {
            try {
                out.emplace_back(tok);
            } catch (const std::exception&) {
                throw ConfigError("bad coordinate '" + tok + "'");
            }
        }
        if (out.size() != len)
            throw ConfigError("expected " + std::to_string(len) + " entries after " + tag);
        return out;
    };
    return LamCoords{part(text.substr(0, semi), "a:"), part(text.substr(semi + 1), "b:")};
}

bool LamCoords::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    for (const auto& x : b)
        if (x != 0) return false;
    return true;
}

LamCoords to_dynnikov(SurfaceSpec spec, const Weights& w) {
    const int m = disk_m(spec);
    Triangulation T(m);
    LamCoords c;
    std::vector<BigInt> B(m);
    for (int i = 1; i <= m - 1; ++i) B[i] = beta(T, w, i);
    for (int i = 1; i <= m - 2; ++i) {
        c.a.push_back((w[T.down(i + 1)] - w[T.up(i + 1)]) / 2);
        c.b.push_back((B[i] - B[i + 1]) / 2);
    }
    return c;
}

Weights from_dynnikov(SurfaceSpec spec, const LamCoords& c) {
    const int m = disk_m(spec);
    Triangulation T(m);
    if (c.a.size() != std::size_t(m - 2) || c.b.size() != std::size_t(m - 2))
        throw ConfigError("coordinate vector has the wrong length");
    if (c.is_zero()) throw ConfigError("zero coordinates describe the empty lamination");
    // The arc count over the whole axis is M, recovered from the running
    // sums of b.
    BigInt M = 0, prefix = 0;
    bool first = true;
    for (int k = 0; k < m - 2; ++k) {
        BigInt v = babs(c.a[k]) + bmax(c.b[k], 0) + prefix;
        if (first || v > M) M = v;
        first = false;
        prefix += c.b[k];
    }
    std::vector<BigInt> B(m);
    prefix = 0;
    for (int i = 1; i <= m - 1; ++i) {
        B[i] = 2 * M - 2 * prefix;
        if (i <= m - 2) prefix += c.b[i - 1];
    }
    Weights w(T.edge_count(), 0);
    for (int i = 1; i <= m - 2; ++i) {
        BigInt mx = bmax(B[i], B[i + 1]) / 2;
        w[T.up(i + 1)] = mx - c.a[i - 1];
        w[T.down(i + 1)] = mx + c.a[i - 1];
    }
    w[T.left_ray()] = B[1] / 2;
    w[T.right_ray()] = B[m - 1] / 2;
    for (int i = 1; i <= m - 1; ++i) {
        const BigInt& ui = w[T.up(i)];
        const BigInt& ui1 = w[T.up(i + 1)];
        const BigInt& di = w[T.down(i)];
        const BigInt& di1 = w[T.down(i + 1)];
        w[T.axis(i)] = (ui + ui1 + di + di1 + babs(ui - ui1 - di + di1)) / 2 - B[i];
    }
    if (!weights_valid(T, w) || !(to_dynnikov(spec, w) == c))
        throw ConfigError("coordinates do not describe an integral lamination");
    return w;
}

bool weights_valid(const Triangulation& T, const Weights& w) {
    if (static_cast<int>(w.size()) != T.edge_count()) return false;
    for (const auto& x : w)
        if (x < 0) return false;
    for (int t = 0; t < T.triangle_count(); ++t) {
        const auto& sd = T.sides(t);
        for (int s = 0; s < 3; ++s) {
            BigInt c = w[sd[s].edge] + w[sd[(s + 1) % 3].edge] - w[sd[(s + 2) % 3].edge];
            if (c < 0 || (c & 1) != 0) return false;
        }
    }
    return true;
}

// ---- curves as weight vectors ---------------------------------------------

Weights base_weights(SurfaceSpec spec, int i, int j) {
    const int m = disk_m(spec);
    Triangulation T(m);
    if (!(1 <= i && i < j && j <= m)) throw std::invalid_argument("base curve needs 1 <= i < j <= 2n-1");
    Weights w(T.edge_count(), 0);
    for (int k = i; k <= j; ++k) {
        w[T.up(k)] = 1;
        w[T.down(k)] = 1;
    }
    if (i >= 2) w[T.axis(i - 1)] = 1;
    if (j <= m - 1) w[T.axis(j)] = 1;
    return w;
}

Weights peripheral_weights(SurfaceSpec spec, int p) {
    const int m = disk_m(spec);
    Triangulation T(m);
    if (p < 1 || p > m + 1) throw std::invalid_argument("puncture out of range");
    Weights w(T.edge_count(), 0);
    for (int e : T.incident(p)) w[e] = 1;
    return w;
}

// Half-twist update rules, obtained by writing the twist as a sequence of
// diagonal flips. The rules below (with u and d in their plain roles) give
// sigma_i^-1; sigma_i is their reflection in the axis.
Weights apply_generator(SurfaceSpec spec, const Weights& w, McgGenerator g) {
    const int m = disk_m(spec);
    Triangulation T(m);
    const int i = g.index;
    if (i < 1 || i > m - 1) throw std::invalid_argument("generator out of range");
    Weights src = w;
    Weights dst = w;
    View o{T, src, g.sign > 0};
    View n{T, dst, g.sign > 0};

    BigInt gg, A, gp, B;
    if (i <= m - 2) {
        gg = bmax(o.e(i) + o.d(i + 2), o.e(i + 1) + o.d(i)) - o.d(i + 1);
        A = bmax(gg + o.u(i + 1), o.u(i + 2) + o.e(i)) - o.e(i + 1);
    }
    if (i >= 2) {
        gp = bmax(o.e(i - 1) + o.u(i + 1), o.e(i) + o.u(i - 1)) - o.u(i);
        B = bmax(gp + o.d(i), o.d(i - 1) + o.e(i)) - o.e(i - 1);
    }
    if (i >= 2 && i <= m - 2) {
        n.u(i) = o.u(i + 1);
        n.u(i + 1) = A;
        n.d(i + 1) = o.d(i);
        n.d(i) = B;
        n.e(i - 1) = gp;
        n.e(i + 1) = gg;
    } else if (i == 1) {
        n.u(1) = o.u(2);  // the left ray
        n.u(2) = A;
        n.d(2) = o.d(1);
        n.e(2) = gg;
    } else {
        n.u(m) = o.d(m - 1);  // the right ray
        n.u(m - 1) = o.u(m);
        n.d(m - 1) = B;
        n.e(m - 2) = gp;
    }
    return dst;
}

Weights apply_word(SurfaceSpec spec, Weights w, const McgWord& word) {
    const auto& L = word.letters();
    for (auto it = L.rbegin(); it != L.rend(); ++it) w = apply_generator(spec, w, *it);
    return w;
}

BigInt norm(const Weights& w) {
    BigInt s = 0;
    for (const auto& x : w) s += x;
    return s;
}

bool is_essential(SurfaceSpec spec, const Weights& w) {
    if (norm(w) == 0) return false;
    for (int p = 1; p <= spec.punctures(); ++p)
        if (w == peripheral_weights(spec, p)) return false;
    return true;
}

std::vector<long long> small_weights(const Weights& w, long long limit) {
    std::vector<long long> out;
    out.reserve(w.size());
    BigInt total = 0;
    for (const auto& x : w) {
        total += x;
        if (x < 0 || total > limit) throw std::length_error("curve too long to draw explicitly");
        out.push_back(static_cast<long long>(x));
    }
    return out;
}

// ---- CurveClass ------------------------------------------------------------

CurveClass CurveClass::from_weights(SurfaceSpec spec, Weights w) {
    Triangulation T(disk_m(spec));
    if (!weights_valid(T, w)) throw ConfigError("weights are not normal coordinates");
    if (norm(w) == 0) throw ConfigError("empty lamination is not a curve");
    if (component_count(T, small_weights(w)) != 1) throw ConfigError("coordinates describe a multicurve");
    CurveClass c;
    c.spec_ = spec;
    c.weights_ = std::move(w);
    return c;
}

CurveClass CurveClass::from_coords(SurfaceSpec spec, const LamCoords& coords) {
    return from_weights(spec, from_dynnikov(spec, coords));
}

CurveClass CurveClass::with_word(SurfaceSpec spec, Weights w, Pi1Word word) {
    CurveClass c;
    c.spec_ = spec;
    c.weights_ = std::move(w);
    c.word_ = std::move(word);
    return c;
}

Pi1Word CurveClass::word() const {
    if (word_) return *word_;
    if (base_) {
        std::vector<int> letters;
        for (int k = base_->first; k <= base_->second; ++k) letters.push_back(k);
        Pi1Word b = reduce(spec_, letters);
        return history_ ? act_pi1(*history_, b) : b;
    }
    Triangulation T(disk_m(spec_));
    return word_of_path(spec_, T, steps_of(trace_curve(T, small_weights(weights_))));
}

bool CurveClass::connected() const {
    Triangulation T(disk_m(spec_));
    return component_count(T, small_weights(weights_)) == 1;
}

CurveClass base_curve(SurfaceSpec spec, int i, int j, bool allow_peripheral) {
    const int m = disk_m(spec);
    if (i == j) throw PeripheralCurve("a curve around a single puncture is peripheral");
    if (!(1 <= i && i < j && j <= m)) throw std::invalid_argument("base curve needs 1 <= i < j <= 2n-1");
    if (i == 1 && j == m && !allow_peripheral)
        throw PeripheralCurve("curve around punctures 1..2n-1 is peripheral to puncture 2n");
    CurveClass c;
    c.spec_ = spec;
    c.weights_ = base_weights(spec, i, j);
    c.base_ = std::make_pair(i, j);
    c.history_ = McgWord(spec);
    return c;
}

CurveClass apply_generator(const CurveClass& c, McgGenerator g) {
    CurveClass out;
    out.spec_ = c.spec_;
    out.weights_ = apply_generator(c.spec_, c.weights_, g);
    if (c.base_) {
        out.base_ = c.base_;
        out.history_ = c.history_->prepend(g);
    } else {
        out.word_ = act_pi1(McgWord(c.spec_, {g}), c.word());
    }
    return out;
}

CurveClass apply_word(const CurveClass& c, const McgWord& w) {
    if (!(w.spec() == c.spec())) throw std::invalid_argument("word and curve on different surfaces");
    if (c.base()) {
        CurveClass out = c;
        out.weights_ = apply_word(c.spec(), c.weights(), w);
        out.history_ = w * *c.history();
        return out;
    }
    CurveClass out = c;
    out.weights_ = apply_word(c.spec(), c.weights(), w);
    out.word_ = act_pi1(w, c.word());
    return out;
}

bool is_essential(const CurveClass& c) { return is_essential(c.spec(), c.weights()); }

BigInt norm(const CurveClass& c) { return norm(c.weights()); }

}  // namespace bridge
