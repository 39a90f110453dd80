#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "admzeta/admissible.hpp"
#include "admzeta/representations.hpp"

namespace admzeta {

enum class TargetKind { Direct, AlternatingNumerator };

std::string_view to_string(TargetKind kind);

// f(z) = constant + sum_{r admissible <= n} sign(r) / (r^z - 1), with sign(r) = 1 for
// Direct and (-1)^(r-1) for AlternatingNumerator.
struct TargetSpec {
    TargetKind kind = TargetKind::Direct;
    std::uint64_t n = 2;
    double constant = 1.0;
};

// The eight partial-sum equations whose zeros are tabulated for this library:
// paper-direct-{2,3,5,6} and paper-alt-{2,3,5,6}. paper-alt-5 carries constant 1/2.
std::optional<TargetSpec> target_preset(std::string_view name);
std::vector<std::string> target_preset_names();

class PartialSum {
public:
    explicit PartialSum(TargetSpec spec);

    const TargetSpec& spec() const noexcept { return spec_; }
    std::size_t term_count() const noexcept { return bases_.size(); }

    // Both throw PoleError within kPoleGate of a lattice pole.
    Complex value(Complex z) const;
    Complex derivative(Complex z) const;
    double pole_distance(Complex z) const;

    // Lattice poles strictly inside the open rectangle, counted once each.
    // The shared pole at the origin is counted when its residue is nonzero.
    std::size_t poles_inside(double re_min, double re_max, double im_min, double im_max) const;
    // Whether some lattice pole (origin included) has imaginary part in [im_lo, im_hi].
    bool has_pole_in_band(double im_lo, double im_hi) const;

private:
    TargetSpec spec_;
    std::vector<std::uint64_t> bases_;
    std::vector<double> logs_;
    std::vector<double> signs_;
};

struct SearchRegion {
    double re_min = -2;
    double re_max = 2;
    double im_min = -6;
    double im_max = 6;
    int grid_re = 40;
    int grid_im = 40;

    // Throws InputError unless bounds are finite and ordered and grids >= 2.
    void validate() const;
    bool contains(Complex z) const;
};

struct RootRecord {
    Complex location;
    double residual = 0;
    bool verified = false;
    // Winding number of f on the verification circle; 0 when it could not be computed.
    int winding = 0;
    std::optional<std::size_t> conjugate_of;
};

enum class NewtonStatus { Converged, Stagnation, Escape, Pole, IterationCap };

std::string_view to_string(NewtonStatus status);

struct NewtonResult {
    NewtonStatus status;
    Complex location;
    double residual;
    int iterations;

    bool converged() const noexcept { return status == NewtonStatus::Converged; }
};

inline constexpr double kDefaultRootTolerance = 1e-10;
inline constexpr int kDefaultNewtonIterations = 100;
inline constexpr double kStagnationDerivative = 1e-14;

// Newton iteration with step halving on |f|. Converged when |f| <= tol and the last
// step < tol.
// Iterates leaving `bounds` (default |Re|, |Im| <= 1e3) report Escape.
NewtonResult newton_refine(const PartialSum& f, Complex seed, double tol = kDefaultRootTolerance,
                           int max_iter = kDefaultNewtonIterations,
                           const SearchRegion* bounds = nullptr);

// Winding number of f around 0 along |z - center| = radius sampled at `samples` points.
// Throws ContourError if a lattice pole lies inside or within kPoleGate of the circle and
// ResolutionError if adjacent samples differ in phase by more than pi/2.
int winding_count(const PartialSum& f, Complex center, double radius, int samples);

struct ZeroSearchOptions {
    double tol = kDefaultRootTolerance;
    int max_iter = kDefaultNewtonIterations;
    // 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

// Grid-seeded Newton search; roots inside `region`, deduplicated within 10 tol, verified by
// winding number, sorted by (im, re) and linked to their conjugates.
std::vector<RootRecord> find_zeros(const PartialSum& f, const SearchRegion& region,
                                   const ZeroSearchOptions& options = {});

struct RegionCount {
    SearchRegion contour;  // boundary actually integrated (after nudging)
    int winding;           // zeros minus poles
    std::size_t poles;
    int zeros;
};

// Argument-principle zero count for the rectangle. Edges passing close to a lattice pole
// are pushed outward by at most one grid cell.
RegionCount region_zero_count(const PartialSum& f, const SearchRegion& region);

}  // namespace admzeta
