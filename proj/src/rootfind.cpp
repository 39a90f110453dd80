#include "admzeta/rootfind.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "admzeta/errors.hpp"
#include "term_kernel.hpp"

namespace admzeta {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kMaxVerifyRadius = 0.25;
constexpr int kMinWindingSamples = 64;
constexpr int kMaxWindingSamples = 1 << 16;

// Integer k with lo < k*period < hi (open) or lo <= k*period <= hi (closed), k != 0.
std::size_t nonzero_multiples_in(double period, double lo, double hi, bool open) {
    std::int64_t k_lo = static_cast<std::int64_t>(std::ceil(lo / period));
    std::int64_t k_hi = static_cast<std::int64_t>(std::floor(hi / period));
    if (open) {
        if (k_lo * period <= lo) ++k_lo;
        if (k_hi * period >= hi) --k_hi;
    }
    if (k_hi < k_lo) return 0;
    std::size_t count = static_cast<std::size_t>(k_hi - k_lo + 1);
    if (k_lo <= 0 && 0 <= k_hi) --count;
    return count;
}

SearchRegion expanded(const SearchRegion& region) {
    const double w = region.re_max - region.re_min;
    const double h = region.im_max - region.im_min;
    SearchRegion out = region;
    out.re_min -= w;
    out.re_max += w;
    out.im_min -= h;
    out.im_max += h;
    return out;
}

double phase_step(Complex from, Complex to) { return std::arg(to / from); }

constexpr int kMaxHalvings = 20;

bool decreases(const PartialSum& f, Complex z, double residual) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    try {
        return std::abs(f.value(z)) < residual;
    } catch (const PoleError&) {
        return false;
    }
}

}  // namespace

std::string_view to_string(TargetKind kind) {
    return kind == TargetKind::Direct ? "direct" : "alt";
}

std::string_view to_string(NewtonStatus status) {
    switch (status) {
        case NewtonStatus::Converged: return "converged";
        case NewtonStatus::Stagnation: return "stagnation";
        case NewtonStatus::Escape: return "escape";
        case NewtonStatus::Pole: return "pole";
        case NewtonStatus::IterationCap: return "iteration-cap";
    }
    return "unknown";
}

std::optional<TargetSpec> target_preset(std::string_view name) {
    struct Preset {
        std::string_view name;
        TargetSpec spec;
    };
    static constexpr Preset presets[] = {
        {"paper-direct-2", {TargetKind::Direct, 2, 1.0}},
        {"paper-direct-3", {TargetKind::Direct, 3, 1.0}},
        {"paper-direct-5", {TargetKind::Direct, 5, 1.0}},
        {"paper-direct-6", {TargetKind::Direct, 6, 1.0}},
        {"paper-alt-2", {TargetKind::AlternatingNumerator, 2, 1.0}},
        {"paper-alt-3", {TargetKind::AlternatingNumerator, 3, 1.0}},
        // This equation is printed with 1/2 in place of 1.
        {"paper-alt-5", {TargetKind::AlternatingNumerator, 5, 0.5}},
        {"paper-alt-6", {TargetKind::AlternatingNumerator, 6, 1.0}},
    };
    for (const auto& p : presets) {
        if (p.name == name) return p.spec;
    }
    return std::nullopt;
}

std::vector<std::string> target_preset_names() {
    return {"paper-direct-2", "paper-direct-3", "paper-direct-5", "paper-direct-6",
            "paper-alt-2",    "paper-alt-3",    "paper-alt-5",    "paper-alt-6"};
}

PartialSum::PartialSum(TargetSpec spec) : spec_(spec) {
    if (!std::isfinite(spec.constant)) throw InputError("target constant must be finite");
    bases_ = admissible_up_to(spec.n).members;
    logs_.reserve(bases_.size());
    signs_.reserve(bases_.size());
    for (const auto r : bases_) {
        logs_.push_back(std::log(static_cast<double>(r)));
        signs_.push_back(spec.kind == TargetKind::Direct ? 1.0 : detail::alternating_sign(r));
    }
}

Complex PartialSum::value(Complex z) const {
    Complex acc = spec_.constant;
    for (std::size_t i = 0; i < bases_.size(); ++i) {
        detail::gate_pole(z, bases_[i], logs_[i], kPoleGate);
        acc += signs_[i] * detail::inverse_expm1(z * logs_[i]);
    }
    return acc;
}

Complex PartialSum::derivative(Complex z) const {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < bases_.size(); ++i) {
        detail::gate_pole(z, bases_[i], logs_[i], kPoleGate);
        const Complex t = detail::inverse_expm1(z * logs_[i]);
        acc -= signs_[i] * logs_[i] * t * (1.0 + t);
    }
    return acc;
}

double PartialSum::pole_distance(Complex z) const {
    double best = std::numeric_limits<double>::infinity();
    for (const double log_r : logs_) {
        best = std::min(best, detail::nearest_lattice_pole(z, log_r).distance);
    }
    return best;
}

std::size_t PartialSum::poles_inside(double re_min, double re_max, double im_min,
                                     double im_max) const {
    if (!(re_min < 0 && 0 < re_max)) return 0;
    std::size_t count = 0;
    double origin_residue = 0;
    for (std::size_t i = 0; i < logs_.size(); ++i) {
        count += nonzero_multiples_in(kTwoPi / logs_[i], im_min, im_max, true);
        origin_residue += signs_[i] / logs_[i];
    }
    if (im_min < 0 && 0 < im_max && std::abs(origin_residue) > 1e-12) ++count;
    return count;
}

bool PartialSum::has_pole_in_band(double im_lo, double im_hi) const {
    if (im_lo <= 0 && 0 <= im_hi) return true;
    return std::any_of(logs_.begin(), logs_.end(), [&](double log_r) {
        return nonzero_multiples_in(kTwoPi / log_r, im_lo, im_hi, false) > 0;
    });
}

void SearchRegion::validate() const {
    for (double v : {re_min, re_max, im_min, im_max}) {
        if (!std::isfinite(v)) throw InputError("search region bounds must be finite");
    }
    if (!(re_min < re_max) || !(im_min < im_max)) {
        throw InputError("search region requires re_min < re_max and im_min < im_max");
    }
    if (grid_re < 2 || grid_im < 2) throw InputError("search grid needs at least 2 seeds per axis");
}

bool SearchRegion::contains(Complex z) const {
    return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
}

NewtonResult newton_refine(const PartialSum& f, Complex seed, double tol, int max_iter,
                           const SearchRegion* bounds) {
    if (!(tol > 0)) throw InputError("newton_refine: tol must be positive");
    require_finite(seed);
    const SearchRegion box = bounds ? *bounds : SearchRegion{-1e3, 1e3, -1e3, 1e3};

    Complex z = seed;
    double last_step = std::numeric_limits<double>::infinity();
    for (int it = 0;; ++it) {
        Complex fz;
        Complex dfz;
        try {
            fz = f.value(z);
            dfz = f.derivative(z);
        } catch (const PoleError&) {
            return {NewtonStatus::Pole, z, std::numeric_limits<double>::infinity(), it};
        }
        const double residual = std::abs(fz);
        if (residual <= tol && last_step < tol) return {NewtonStatus::Converged, z, residual, it};
        if (it >= max_iter) return {NewtonStatus::IterationCap, z, residual, it};
        if (std::abs(dfz) < kStagnationDerivative) {
            return {NewtonStatus::Stagnation, z, residual, it};
        }
        // Halve the Newton step until |f| decreases; fall back to the full step if it never
        // does. Close to a simple root the full step is always accepted.
        const Complex step = fz / dfz;
        Complex trial = z - step;
        double scale = 1.0;
        for (int halvings = 0; halvings < kMaxHalvings; ++halvings) {
            if (decreases(f, trial, residual)) break;
            scale *= 0.5;
            trial = z - scale * step;
        }
        if (!decreases(f, trial, residual)) {
            scale = 1.0;
            trial = z - step;
        }
        z = trial;
        last_step = scale * std::abs(step);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !box.contains(z)) {
            return {NewtonStatus::Escape, z, residual, it + 1};
        }
    }
}

int winding_count(const PartialSum& f, Complex center, double radius, int samples) {
    require_finite(center);
    if (!(radius > 0)) throw InputError("winding_count: radius must be positive");
    if (samples < 8) throw InputError("winding_count: need at least 8 samples");
    if (f.pole_distance(center) <= radius + kPoleGate) {
        throw ContourError("winding_count: a lattice pole lies inside or on the contour");
    }

    Complex prev = f.value(center + radius);
    Complex first = prev;
    double total = 0;
    for (int j = 1; j <= samples; ++j) {
        const Complex cur =
            j == samples ? first : f.value(center + std::polar(radius, kTwoPi * j / samples));
        if (cur == 0.0) throw ContourError("winding_count: f vanishes on the contour");
        const double step = phase_step(prev, cur);
        if (std::abs(step) > std::numbers::pi / 2) {
            throw ResolutionError("winding_count: phase step exceeds pi/2; increase samples");
        }
        total += step;
        prev = cur;
    }
    return static_cast<int>(std::lround(total / kTwoPi));
}

std::vector<RootRecord> find_zeros(const PartialSum& f, const SearchRegion& region,
                                   const ZeroSearchOptions& options) {
    region.validate();
    const double tol = options.tol;
    if (!(tol > 0)) throw InputError("find_zeros: tol must be positive");
    const double merge = 10 * tol;

    std::vector<Complex> seeds;
    seeds.reserve(static_cast<std::size_t>(region.grid_re) * region.grid_im);
    for (int i = 0; i < region.grid_re; ++i) {
        const double re = region.re_min + (region.re_max - region.re_min) * i / (region.grid_re - 1);
        for (int j = 0; j < region.grid_im; ++j) {
            const double im =
                region.im_min + (region.im_max - region.im_min) * j / (region.grid_im - 1);
            seeds.emplace_back(re, im);
        }
    }

    // Each slot is written by exactly one worker; aggregation below runs in seed order.
    const SearchRegion bounds = expanded(region);
    std::vector<NewtonResult> outcomes(seeds.size(),
                                       NewtonResult{NewtonStatus::IterationCap, {}, 0, 0});
    {
        unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
        workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(seeds.size()));
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i = next++; i < seeds.size(); i = next++) {
                outcomes[i] = newton_refine(f, seeds[i], tol, options.max_iter, &bounds);
            }
        };
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
    }

    std::vector<RootRecord> roots;
    auto is_duplicate = [&](Complex z) {
        return std::any_of(roots.begin(), roots.end(),
                           [&](const RootRecord& r) { return std::abs(r.location - z) <= merge; });
    };
    auto accept = [&](const NewtonResult& res) {
        if (!res.converged() || !region.contains(res.location)) return;
        RootRecord rec;
        rec.location = res.location;
        rec.residual = res.residual;
        if (rec.location.imag() != 0 && std::abs(rec.location.imag()) <= merge) {
            const Complex real_axis(rec.location.real(), 0.0);
            try {
                const double snapped = std::abs(f.value(real_axis));
                if (snapped <= tol) {
                    rec.location = real_axis;
                    rec.residual = snapped;
                }
            } catch (const PoleError&) {
            }
        }
        if (is_duplicate(rec.location)) return;
        roots.push_back(rec);
    };
    for (const auto& res : outcomes) accept(res);

    // A conjugate can be missed when its seeds all wandered off; refine from the mirror image.
    const std::size_t found = roots.size();
    for (std::size_t i = 0; i < found; ++i) {
        const Complex mirror = std::conj(roots[i].location);
        if (roots[i].location.imag() == 0 || is_duplicate(mirror)) continue;
        accept(newton_refine(f, mirror, tol, options.max_iter, &bounds));
    }

    for (std::size_t i = 0; i < roots.size(); ++i) {
        auto& rec = roots[i];
        double radius = std::min(kMaxVerifyRadius, 0.5 * f.pole_distance(rec.location));
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j != i) radius = std::min(radius, 0.5 * std::abs(roots[j].location - rec.location));
        }
        rec.winding = 0;
        for (int samples = kMinWindingSamples; samples <= kMaxWindingSamples; samples *= 2) {
            try {
                rec.winding = winding_count(f, rec.location, radius, samples);
                break;
            } catch (const ResolutionError&) {
                continue;
            } catch (const DomainError&) {
                break;
            }
        }
        rec.verified = rec.winding == 1 && rec.residual <= tol;
    }

    std::sort(roots.begin(), roots.end(), [](const RootRecord& a, const RootRecord& b) {
        if (a.location.imag() != b.location.imag()) return a.location.imag() < b.location.imag();
        return a.location.real() < b.location.real();
    });
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].location.imag() == 0) continue;
        const Complex mirror = std::conj(roots[i].location);
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j != i && std::abs(roots[j].location - mirror) <= merge) {
                roots[i].conjugate_of = j;
                break;
            }
        }
    }
    return roots;
}

namespace {

// Closest approach of the lattice to each edge of the rectangle.
double boundary_clearance(const PartialSum& f, const SearchRegion& r) {
    auto horizontal = [&](double y) {
        return f.pole_distance({std::clamp(0.0, r.re_min, r.re_max), y});
    };
    auto vertical = [&](double x) {
        const double gap = f.has_pole_in_band(r.im_min, r.im_max)
                               ? 0.0
                               : std::min(f.pole_distance({0.0, r.im_min}),
                                          f.pole_distance({0.0, r.im_max}));
        return std::hypot(x, gap);
    };
    return std::min({horizontal(r.im_min), horizontal(r.im_max), vertical(r.re_min),
                     vertical(r.re_max)});
}

double edge_phase(const PartialSum& f, Complex a, Complex b, Complex fa, Complex fb, int depth) {
    const double step = phase_step(fa, fb);
    if (std::abs(step) <= std::numbers::pi / 4) return step;
    if (depth > 48) throw ResolutionError("region_zero_count: phase refinement did not settle");
    const Complex m = 0.5 * (a + b);
    const Complex fm = f.value(m);
    if (fm == 0.0) throw ContourError("region_zero_count: f vanishes on the boundary");
    return edge_phase(f, a, m, fa, fm, depth + 1) + edge_phase(f, m, b, fm, fb, depth + 1);
}

}  // namespace

RegionCount region_zero_count(const PartialSum& f, const SearchRegion& region) {
    region.validate();
    const double cell_re = (region.re_max - region.re_min) / (region.grid_re - 1);
    const double cell_im = (region.im_max - region.im_min) / (region.grid_im - 1);
    const double needed = std::max(kPoleGate, 1e-3 * std::min(cell_re, cell_im));

    SearchRegion contour = region;
    constexpr int kNudgeSteps = 16;
    for (int j = 1; j <= kNudgeSteps && boundary_clearance(f, contour) < needed; ++j) {
        // Push every edge outward together; the region only grows.
        contour = region;
        contour.re_min -= cell_re * j / kNudgeSteps;
        contour.re_max += cell_re * j / kNudgeSteps;
        contour.im_min -= cell_im * j / kNudgeSteps;
        contour.im_max += cell_im * j / kNudgeSteps;
    }
    if (boundary_clearance(f, contour) < needed) {
        throw ContourError("region_zero_count: could not move the boundary off the pole lattice");
    }

    const Complex corners[] = {{contour.re_min, contour.im_min},
                               {contour.re_max, contour.im_min},
                               {contour.re_max, contour.im_max},
                               {contour.re_min, contour.im_max}};
    double total = 0;
    for (int e = 0; e < 4; ++e) {
        const Complex a = corners[e];
        const Complex b = corners[(e + 1) % 4];
        const int pieces = std::max(64, static_cast<int>(std::ceil(std::abs(b - a) / 0.05)));
        Complex prev_z = a;
        Complex prev_f = f.value(a);
        for (int k = 1; k <= pieces; ++k) {
            const Complex z = a + (b - a) * (static_cast<double>(k) / pieces);
            const Complex fz = f.value(z);
            if (fz == 0.0) throw ContourError("region_zero_count: f vanishes on the boundary");
            total += edge_phase(f, prev_z, z, prev_f, fz, 0);
            prev_z = z;
            prev_f = fz;
        }
    }
    RegionCount out;
    out.contour = contour;
    out.winding = static_cast<int>(std::lround(total / kTwoPi));
    out.poles = f.poles_inside(contour.re_min, contour.re_max, contour.im_min, contour.im_max);
    out.zeros = out.winding + static_cast<int>(out.poles);
    return out;
}

}  // namespace admzeta
