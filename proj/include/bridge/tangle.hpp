#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bridge/diagram.hpp"
#include "bridge/lamination.hpp"
#include "bridge/mcg.hpp"

namespace bridge {

// Fixed-point-free involution on the punctures 1..2n.
class TanglePairing {
public:
    static TanglePairing standard(SurfaceSpec spec);
    // partner[p-1] = q; throws ConfigError unless a fixed-point-free involution.
    static TanglePairing from_partners(std::vector<int> partner);

    int size() const { return static_cast<int>(partner_.size()); }
    int partner(int p) const { return partner_[p - 1]; }
    bool is_standard() const;

private:
    std::vector<int> partner_;
};

// Letters +-j stand for c_j^{+-1}.
struct MeridianWord {
    std::vector<int> letters;

    bool empty() const { return letters.empty(); }
    std::string to_string() const;  // "c1^-1 c2", "1" when empty
};

// One surgery: the returning arc ran between two consecutive crossings of
// the curve with arc b_arc.
struct SurgeryRecord {
    int arc;
    long long count_before;
};

// n disjoint arcs b_i joining paired punctures, with dual meridians c_i.
// The standard system uses b_i = e_{2i-1} (i < n) and b_n = r. After
// surgeries the system remembers the crossing pattern of the tracked curve
// with its arcs; the arcs themselves are only known through that pattern.
class AdmissibleSystem {
public:
    struct Crossing {
        int arc;
        int dir;
    };

    SurfaceSpec spec() const { return spec_; }
    int arc_count() const { return static_cast<int>(ends_.size()); }
    std::pair<int, int> arc_ends(int i) const { return ends_[i - 1]; }
    // Edge of the triangulation carrying b_i in the standard position.
    int standard_edge(int i) const;
    // Entry (j, i) = i(c_j, b_i).
    std::vector<std::vector<int>> duality_matrix() const;
    const std::vector<SurgeryRecord>& provenance() const { return provenance_; }

    // Weights of the curve whose crossings are tracked, if any.
    const std::optional<Weights>& tracked() const { return tracked_; }
    long long intersection_count() const { return live_; }
    // Remaining crossings in order along the tracked curve.
    std::vector<Crossing> pattern() const;

private:
    friend AdmissibleSystem standard_admissible_system(SurfaceSpec spec);
    friend class SurgeryEngine;

    SurfaceSpec spec_{2};
    std::vector<std::pair<int, int>> ends_;
    std::vector<SurgeryRecord> provenance_;
    std::optional<Weights> tracked_;
    // crossings: cyclic list along the curve and a linear list along each arc
    std::vector<Crossing> cross_;
    std::vector<int> next_, prev_, arc_next_, arc_prev_;
    std::vector<char> alive_;
    long long live_ = 0;
};

AdmissibleSystem standard_admissible_system(SurfaceSpec spec);

// Substitutes x_{2i-1} -> c_i, x_{2i} -> c_i^{-1} in the curve's word and
// reduces cyclically. Only the standard pairing is supported; relabel first.
MeridianWord meridian_word(const CurveClass& c, const TanglePairing& p);
// Throws std::invalid_argument for inessential curves.
bool is_disk(const CurveClass& c, const TanglePairing& p);
bool is_disk(const CurveClass& c);

// One surgery along an innermost returning arc: two crossings of the curve
// with the same arc, consecutive along the curve, in opposite directions and
// adjacent along the arc. A standard system starts tracking c; a system
// already tracking another curve is rejected. Throws NotADisk when no
// returning arc exists and std::invalid_argument when c misses the system.
std::pair<AdmissibleSystem, long long> returning_arc_surgery(const CurveClass& c, const AdmissibleSystem& A);

struct GeometricDiskRun {
    bool disk = false;
    std::vector<long long> counts;  // intersection count before each surgery, then the final one
};
GeometricDiskRun run_disk_surgeries(const CurveClass& c);
bool is_disk_geometric(const CurveClass& c);

struct DiskSetSample {
    SurfaceSpec spec{2};
    int bound = 0;
    std::vector<CurveClass> curves;  // BFS discovery order; each has a history
    std::vector<int> depth;          // word length at discovery
    std::size_t visited = 0;         // curves reached, disks or not
};

DiskSetSample enumerate_disks(SurfaceSpec spec, int L);

enum class CertificateStatus { CommonDisk, DisjointPair, NonFillingPair, NoWitness };
std::string status_name(CertificateStatus s);
// Bound on the distance between the two disk sets implied by the status.
std::string status_meaning(CertificateStatus s);

struct DistanceCertificate {
    McgWord word;
    int bound = 0;
    CertificateStatus status = CertificateStatus::NoWitness;
    // (a, b): curve a of D against w applied to curve b of D
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    bool verified = false;
    std::size_t pairs_skipped = 0;  // pairs above the norm cap, not tested for filling

    static std::string csv_header();
    std::string csv_row() const;
};

struct CertificateOptions {
    // Pairs whose normalized image exceeds this norm skip the filling test.
    long long fill_norm_cap = 200000;
};

DistanceCertificate distance_certificate(const McgWord& w, int L);
DistanceCertificate distance_certificate(const McgWord& w, const DiskSetSample& D,
                                         const CertificateOptions& opt = {});

// Disk curves from a to b; b must come from base_curve (possibly moved by a
// word) around a pair of punctures adjacent along an edge.
std::vector<CurveClass> disk_path(const CurveClass& a, const CurveClass& b);

// 2 + 2 ceil(log2 i(c1, c2)); requires i >= 1.
long long distance_upper_bound_log(const CurveClass& c1, const CurveClass& c2);
long long distance_upper_bound_log(long long i);

}  // namespace bridge
