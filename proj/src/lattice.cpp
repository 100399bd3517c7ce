#include "surfcore/lattice.hpp"

#include "surfcore/errors.hpp"
#include "surfcore/linalg.hpp"

namespace surfcore {

namespace {

template <class A, class B, class R>
R pair_impl(const A& w, const B& v) {
    const auto& g = *w.graph();
    R total = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (w[i] == 0) continue;
        R row = 0;
        for (std::size_t j = 0; j < g.size(); ++j)
            if (const auto m = g.intersection(i, j); m != 0 && v[j] != 0) row += R(v[j]) * R(m);
        total += R(w[i]) * row;
    }
    return total;
}

void require_valid(const DualGraph& g, const char* op) {
    if (!g.is_valid())
        throw PreconditionError(std::string(op) + ": graph '" + g.name() + "' is not valid");
}

void require_antinef_positive(const Cycle& z, const char* op) {
    if (z.is_zero()) throw PreconditionError(std::string(op) + ": cycle must be nonzero");
    if (!is_antinef(z))
        throw PreconditionError(std::string(op) + ": cycle " + format_cycle(z) +
                                " is not anti-nef");
}

}  // namespace

Integer pair(const Cycle& w, const Cycle& v) {
    w.check_same_graph(v);
    return pair_impl<Cycle, Cycle, Integer>(w, v);
}

Rational pair(const QCycle& w, const QCycle& v) {
    w.check_same_graph(v);
    Rational r = pair_impl<QCycle, QCycle, Rational>(w, v);
    r.canonicalize();
    return r;
}

Rational pair(const QCycle& w, const Cycle& v) { return pair(w, to_rational(v)); }

Integer pair_with_vertex(const Cycle& w, std::size_t i) {
    const auto& g = *w.graph();
    Integer s = 0;
    for (std::size_t j = 0; j < g.size(); ++j)
        if (const auto m = g.intersection(i, j); m != 0) s += w[j] * m;
    return s;
}

Integer k_dot(const Cycle& w) {
    const auto& g = *w.graph();
    Integer s = 0;
    for (std::size_t i = 0; i < g.size(); ++i) s += w[i] * g.vertex(i).kappa;
    return s;
}

QCycle canonical_cycle(const GraphPtr& g) {
    require_valid(*g, "canonical_cycle");
    const std::size_t n = g->size();
    linalg::IntMatrix m(n);
    std::vector<Integer> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = g->intersection(i, j);
        rhs[i] = -g->vertex(i).kappa;
    }
    return QCycle(g, linalg::solve(m, rhs));
}

bool is_numerically_gorenstein(const GraphPtr& g) {
    const auto zk = canonical_cycle(g);
    for (const auto& c : zk.coeffs())
        if (!is_integral(c)) return false;
    return true;
}

Rational arithmetic_genus(const Cycle& z) {
    Rational r(Integer(pair(z, z) + k_dot(z)), Integer(2));
    r.canonicalize();
    return r + 1;
}

bool is_antinef(const Cycle& z) {
    for (std::size_t i = 0; i < z.size(); ++i)
        if (pair_with_vertex(z, i) > 0) return false;
    return true;
}

Cycle antinef_closure(const Cycle& d, ClosureTrace* trace) {
    const auto& g = *d.graph();
    require_valid(g, "antinef_closure");
    if (!d.is_effective()) throw PreconditionError("antinef_closure: cycle is not effective");
    if (d.is_zero()) throw PreconditionError("antinef_closure: cycle is zero");

    Cycle z = d;
    const std::size_t n = g.size();
    std::vector<Integer> dots(n);
    for (std::size_t i = 0; i < n; ++i) dots[i] = pair_with_vertex(z, i);

    for (std::size_t i = 0; i < n;) {
        if (dots[i] <= 0) {
            ++i;
            continue;
        }
        if (trace) trace->push_back({g.id(i), z[i] + 1, dots[i]});
        z[i] += 1;
        for (std::size_t j = 0; j < n; ++j) dots[j] += g.intersection(i, j);
        i = 0;
    }
    return z;
}

Cycle fundamental_cycle(const GraphPtr& g, std::size_t start, ClosureTrace* trace) {
    if (start >= g->size()) throw InputError("fundamental_cycle: start vertex out of range");
    return antinef_closure(Cycle::unit(g, start), trace);
}

bool is_rational(const GraphPtr& g) {
    require_valid(*g, "is_rational");
    return arithmetic_genus(fundamental_cycle(g)) == 0;
}

Integer multiplicity(const Cycle& z) {
    require_antinef_positive(z, "multiplicity");
    return -pair(z, z);
}

Integer colength(const Cycle& z, const Integer& pg, const Integer& h1) {
    if (pg < 0 || h1 < 0) throw PreconditionError("colength: pg and h1 must be >= 0");
    if (h1 > pg) throw PreconditionError("colength: h1 exceeds pg");
    require_antinef_positive(z, "colength");
    const Integer s = pair(z, z) + k_dot(z);
    if (s % 2 != 0)
        throw PreconditionError("colength: Z^2 + K.Z is odd; graph violates adjunction parity");
    const Integer ell = -s / 2 + pg - h1;
    if (ell <= 0)
        throw PreconditionError("colength: formula gives " + ell.get_str() +
                                " <= 0; analytic inputs are inconsistent");
    return ell;
}

Integer epsilon(const Integer& pg, const Integer& h1_z, const Integer& h1_zp,
                const Integer& h1_sum) {
    for (const Integer* h : {&pg, &h1_z, &h1_zp, &h1_sum})
        if (*h < 0) throw PreconditionError("epsilon: inputs must be >= 0");
    for (const Integer* h : {&h1_z, &h1_zp, &h1_sum})
        if (*h > pg) throw PreconditionError("epsilon: h1 value exceeds pg");
    const Integer e = pg - h1_z - h1_zp + h1_sum;
    if (e < 0 || e > pg)
        throw PreconditionError("epsilon: value " + e.get_str() +
                                " outside [0, pg]; h1 inputs are inconsistent");
    return e;
}

bool contracts_to_smooth(const Cycle& d) {
    if (!d.is_positive()) throw PreconditionError("contracts_to_smooth: cycle must be > 0");
    return -pair(d, d) + k_dot(d) == 0;
}

}  // namespace surfcore
