#include "surfcore/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "surfcore/errors.hpp"

namespace surfcore::oracle {

namespace {

using Vec = std::vector<std::int64_t>;

struct RawLattice {
    std::size_t n;
    Vec m;  // row-major intersection matrix
    Vec kappa;

    explicit RawLattice(const DualGraph& g) : n(g.size()), m(n * n), kappa(n) {
        for (std::size_t i = 0; i < n; ++i) {
            kappa[i] = g.vertex(i).kappa;
            for (std::size_t j = 0; j < n; ++j) m[i * n + j] = g.intersection(i, j);
        }
    }
};

// Odometer over lo[i] <= x[i] <= hi[i], keeping mx = M x up to date.
class Odometer {
public:
    Odometer(const RawLattice& lat, Vec lo, Vec hi)
        : lat_(lat), lo_(std::move(lo)), hi_(std::move(hi)), x_(lo_), mx_(lat.n, 0) {
        for (std::size_t i = 0; i < lat_.n; ++i)
            for (std::size_t j = 0; j < lat_.n; ++j) mx_[i] += lat_.m[i * lat_.n + j] * x_[j];
    }

    const Vec& x() const { return x_; }
    const Vec& mx() const { return mx_; }

    bool next() {
        for (std::size_t i = 0; i < lat_.n; ++i) {
            if (x_[i] < hi_[i]) {
                add(i, 1);
                return true;
            }
            add(i, lo_[i] - x_[i]);
        }
        return false;
    }

private:
    void add(std::size_t i, std::int64_t d) {
        if (d == 0) return;
        x_[i] += d;
        for (std::size_t j = 0; j < lat_.n; ++j) mx_[j] += lat_.m[j * lat_.n + i] * d;
    }

    const RawLattice& lat_;
    Vec lo_, hi_, x_, mx_;
};

std::int64_t dot(const Vec& a, const Vec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool all_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

std::int64_t small(const Integer& v, const char* what) {
    if (!v.fits_slong_p()) throw PreconditionError(std::string(what) + ": coefficient too large");
    return v.get_si();
}

Cycle to_cycle(const GraphPtr& g, const Vec& v) {
    Cycle c(g);
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = static_cast<long>(v[i]);
    return c;
}

void check_size(const DualGraph& g, const SearchBound& b, const char* what) {
    if (g.size() > b.max_vertices)
        throw PreconditionError(std::string(what) + ": graph has " + std::to_string(g.size()) +
                                " vertices, bound is " + std::to_string(b.max_vertices));
    if (b.max_coeff < 1) throw PreconditionError(std::string(what) + ": max_coeff must be >= 1");
}

// Least element of a set of vectors, if one is <= all the others.
std::optional<Vec> least(const std::vector<Vec>& set) {
    if (set.empty()) return std::nullopt;
    Vec lo = set.front();
    for (const auto& v : set)
        for (std::size_t i = 0; i < v.size(); ++i) lo[i] = std::min(lo[i], v[i]);
    if (std::find(set.begin(), set.end(), lo) == set.end()) return std::nullopt;
    return lo;
}

}  // namespace

SearchBound default_bound(const Cycle& z) {
    SearchBound b;
    b.max_coeff = 2 * z.max_coeff().get_si() + 2;
    return b;
}

MaxYResult enumerate_max_y(const Cycle& z, const Cycle& c, const SearchBound& bound) {
    const auto& g = *z.graph();
    check_size(g, bound, "enumerate_max_y");
    if (!g.same_layout(*c.graph())) throw InputError("enumerate_max_y: Z and C on different graphs");
    const RawLattice lat(g);
    const std::size_t n = lat.n;

    Vec zv(n), mz(n, 0);
    std::vector<bool> in_c(n);
    for (std::size_t i = 0; i < n; ++i) {
        zv[i] = small(z[i], "enumerate_max_y");
        if (zv[i] < 0 || zv[i] > bound.max_coeff)
            throw PreconditionError("enumerate_max_y: Z exceeds the search bound");
        in_c[i] = c[i] > 0;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mz[i] += lat.m[i * n + j] * zv[j];

    MaxYResult res;
    std::vector<Vec> kept;
    Odometer odo(lat, Vec(n, 0), zv);
    do {
        ++res.searched;
        const Vec& y = odo.x();
        const Vec& my = odo.mx();
        bool ok = all_zero(y);
        if (!ok && -dot(y, my) + dot(lat.kappa, y) == 0) {
            ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                const auto w = mz[i] - my[i];  // (Z - Y).E_i
                if (w > 0 || (in_c[i] && w != 0)) ok = false;
            }
        }
        if (ok) kept.push_back(y);
    } while (odo.next());

    res.admissible = kept.size();
    Vec hi(n, 0);
    for (const auto& v : kept)
        for (std::size_t i = 0; i < n; ++i) hi[i] = std::max(hi[i], v[i]);
    if (std::find(kept.begin(), kept.end(), hi) != kept.end()) res.y = to_cycle(z.graph(), hi);
    return res;
}

Cycle fundamental_cycle_bruteforce(const GraphPtr& g, const SearchBound& bound) {
    check_size(*g, bound, "fundamental_cycle_bruteforce");
    const RawLattice lat(*g);
    std::vector<Vec> kept;
    Odometer odo(lat, Vec(lat.n, 0), Vec(lat.n, bound.max_coeff));
    do {
        if (all_zero(odo.x())) continue;
        if (std::all_of(odo.mx().begin(), odo.mx().end(), [](auto v) { return v <= 0; }))
            kept.push_back(odo.x());
    } while (odo.next());
    const auto lo = least(kept);
    if (!lo)
        throw PreconditionError("fundamental_cycle_bruteforce: no least anti-nef cycle within "
                                "coefficient bound " + std::to_string(bound.max_coeff));
    return to_cycle(g, *lo);
}

Cycle antinef_closure_bruteforce(const Cycle& d, const SearchBound& bound) {
    const auto& g = *d.graph();
    check_size(g, bound, "antinef_closure_bruteforce");
    const RawLattice lat(g);
    Vec lo(lat.n);
    for (std::size_t i = 0; i < lat.n; ++i) {
        lo[i] = small(d[i], "antinef_closure_bruteforce");
        if (lo[i] < 0 || lo[i] > bound.max_coeff)
            throw PreconditionError("antinef_closure_bruteforce: D outside the search bound");
    }
    std::vector<Vec> kept;
    Odometer odo(lat, lo, Vec(lat.n, bound.max_coeff));
    do {
        if (std::all_of(odo.mx().begin(), odo.mx().end(), [](auto v) { return v <= 0; }))
            kept.push_back(odo.x());
    } while (odo.next());
    const auto least_z = least(kept);
    if (!least_z)
        throw PreconditionError("antinef_closure_bruteforce: no least anti-nef cycle within bound");
    return to_cycle(d.graph(), *least_z);
}

bool negdef_bruteforce(const DualGraph& g, const SearchBound& bound) {
    check_size(g, bound, "negdef_bruteforce");
    const RawLattice lat(g);
    Odometer odo(lat, Vec(lat.n, -bound.max_coeff), Vec(lat.n, bound.max_coeff));
    do {
        if (!all_zero(odo.x()) && dot(odo.x(), odo.mx()) >= 0) return false;
    } while (odo.next());
    return true;
}

}  // namespace surfcore::oracle
