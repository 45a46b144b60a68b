#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordyn/dynamics.hpp"
#include "ordyn/iterates.hpp"
#include "ordyn/map_dsl.hpp"
#include "ordyn/ultrafilter.hpp"

namespace ordyn {

// Finite, replayable evidence that f^p is discontinuous at a point: a family
// converging to the point whose images stay outside a fixed basic tail of the
// image point, with the violating sample indices recorded.
struct DiscontinuityCertificate {
    PointFamily family;
    Point image_target;
    std::uint32_t tail_index;
    std::vector<std::uint32_t> violating_indices;
};

struct ContinuityVerdict {
    enum class Status { DiscontinuousCertified, ContinuousCertified, ContinuousAtDepth, Unresolved };

    Status status;
    Point point;
    std::string function;  // provenance of the iterate examined
    std::string method;    // certification method for ContinuousCertified
    std::uint32_t depth = 0;
    std::optional<DiscontinuityCertificate> certificate;

    bool discontinuous() const { return status == Status::DiscontinuousCertified; }
    bool continuous_class() const {
        return status == Status::ContinuousCertified || status == Status::ContinuousAtDepth;
    }
};

std::string to_string(ContinuityVerdict::Status s);

// Fixture-supplied exact analysis (closed forms). Either certifies continuity
// outright or produces a counter-family that the generic machinery then
// verifies into a replayable discontinuity certificate.
class ContinuityCertifier {
public:
    virtual ~ContinuityCertifier() = default;

    struct Analysis {
        enum class Kind { None, Continuous, CounterFamily };
        Kind kind = Kind::None;
        std::string method;
        std::optional<PointFamily> counter;
    };

    virtual Analysis analyze(const DynMap& f, const ResidueSystem& p, const Point& x) const = 0;
};

// Per-(map, residue system) continuity analysis with shared orbit/image
// caches; verdict computation is deterministic.
class ContinuityAnalyzer {
public:
    ContinuityAnalyzer(DynMap f, ResidueSystem p,
                       const ContinuityCertifier* certifier = nullptr,
                       std::uint64_t budget = kDefaultOrbitBudget);
    // Variant sharing an orbit cache across several residue systems on the
    // same map (scans); the cache must outlive the analyzer.
    ContinuityAnalyzer(OrbitAnalyzer& shared_orbits, ResidueSystem p,
                       const ContinuityCertifier* certifier = nullptr);

    // thorough = true adds the truncation-wide neighborhood-base scan that can
    // surface discontinuity witnesses outside the canonical/diagonal shapes.
    ContinuityVerdict at(const Point& x, std::uint32_t depth, bool thorough = true);

    OrbitAnalyzer& orbits() { return *orbits_; }

private:
    PIterateResult image_of(const Point& x);
    std::optional<ContinuityVerdict> verify_counter_family(const PointFamily& family,
                                                           const Point& x, const Point& gx,
                                                           std::uint32_t depth);

    DynMap f_;
    ResidueSystem p_;
    const ContinuityCertifier* certifier_;
    std::unique_ptr<OrbitAnalyzer> owned_orbits_;
    OrbitAnalyzer* orbits_;
    std::unordered_map<Point, PIterateResult, PointHash> images_;
};

ContinuityVerdict continuity_at(const DynMap& f, const ResidueSystem& p, const Point& x,
                                std::uint32_t depth,
                                const ContinuityCertifier* certifier = nullptr,
                                std::uint64_t budget = kDefaultOrbitBudget);
// MapSpec overload recognizes the structural identity map.
ContinuityVerdict continuity_at(const MapSpec& f, const ResidueSystem& p, const Point& x,
                                std::uint32_t depth,
                                const ContinuityCertifier* certifier = nullptr,
                                std::uint64_t budget = kDefaultOrbitBudget);

// Lemma-style shortcut: an isolated point on the orbit forces continuity of
// every p-iterate at x.
std::optional<ContinuityVerdict> isolated_orbit_shortcut(const DynMap& f, const Point& x,
                                                         std::uint64_t budget = kDefaultOrbitBudget);

// Re-verifies a discontinuity certificate from scratch at the given depth.
bool replay_certificate(const DynMap& f, const ResidueSystem& p, const ContinuityVerdict& verdict,
                        std::uint32_t depth, std::uint64_t budget = kDefaultOrbitBudget);

struct DichotomyReport {
    std::vector<Point> points;         // accumulation points scanned, ascending
    std::vector<std::string> samples;  // residue-system descriptions
    std::vector<std::vector<ContinuityVerdict::Status>> grid;  // [point][sample]
    std::vector<Point> mixed_points;       // both verdict classes present
    std::vector<Point> unresolved_points;  // excluded from the homogeneity check
    bool accumulation_points_periodic = false;
    bool homogeneous = true;
    // Nonempty only when the per-point dichotomy hypothesis holds yet some
    // point still shows mixed verdicts; any entry indicates an implementation bug.
    std::vector<Point> falsifications;
};

DichotomyReport dichotomy_scan(const DynMap& f, bool accumulation_points_periodic,
                               const std::vector<ResidueSystem>& samples,
                               std::uint64_t truncation_cap, std::uint32_t depth,
                               const ContinuityCertifier* certifier = nullptr,
                               bool thorough = false,
                               std::uint64_t budget = kDefaultOrbitBudget);

}  // namespace ordyn
