#include "surfcore/birational.hpp"

#include <map>

#include "surfcore/errors.hpp"
#include "surfcore/lattice.hpp"

namespace surfcore {

namespace {

std::vector<Edge> edges_plus(const DualGraph& g, std::vector<Edge> extra) {
    auto out = g.edges();
    for (auto& e : extra) out.push_back(std::move(e));
    return out;
}

template <class T>
BasicCycle<T> on_level(const Tower& t, std::size_t k, const BasicCycle<T>& w) {
    const auto& g = t.level(k);
    if (w.graph()->same_layout(*g)) return w;
    if (w.graph()->same_structure(*g)) return w.rebased(g);
    throw InputError("level mismatch: cycle lives on '" + w.graph()->name() +
                     "', not on tower level " + std::to_string(k) + " ('" + g->name() + "')");
}

template <class T>
BasicCycle<T> pullback_step(const Tower& t, std::size_t k, const BasicCycle<T>& w) {
    const auto& lower = *t.level(k);
    const auto& upper = t.level(k + 1);
    const auto e = upper->index_of(t.step(k).exceptional);
    BasicCycle<T> out(upper);
    T at_e = 0;
    for (std::size_t j = 0; j < upper->size(); ++j) {
        if (j == e) continue;
        out[j] = w[lower.index_of(upper->id(j))];
        if (const auto m = upper->intersection(e, j); m != 0) at_e += out[j] * T(m);
    }
    out[e] = at_e;
    return out;
}

template <class T>
BasicCycle<T> pullback_impl(const Tower& t, std::size_t from, std::size_t to,
                            const BasicCycle<T>& w) {
    if (from > to || to > t.top_level())
        throw InputError("pullback: invalid levels " + std::to_string(from) + " -> " +
                         std::to_string(to));
    BasicCycle<T> cur = on_level(t, from, w);
    for (std::size_t k = from; k < to; ++k) cur = pullback_step(t, k, cur);
    return cur;
}

std::string fresh_id(const DualGraph& g, const std::string& prefix) {
    for (int i = 1;; ++i) {
        auto id = prefix + std::to_string(i);
        if (!g.find(id)) return id;
    }
}

}  // namespace

SurgeryResult blowup(const GraphPtr& g, const BlowupCenter& center) {
    if (center.new_id.empty()) throw InputError("blowup: empty id for the new curve");
    if (g->find(center.new_id))
        throw InputError("blowup: vertex '" + center.new_id + "' already exists");

    std::vector<Vertex> vs(g->vertices().begin(), g->vertices().end());
    std::vector<Edge> es;
    auto lower = [&](std::size_t i) {
        vs[i].self_int -= 1;
        vs[i].kappa += 1;
    };

    if (const auto* fp = std::get_if<FreePoint>(&center.where)) {
        const auto v = g->index_of(fp->vertex);
        lower(v);
        es = edges_plus(*g, {{center.new_id, fp->vertex, 1}});
    } else {
        const auto& ep = std::get<EdgePoint>(center.where);
        const auto a = g->index_of(ep.a);
        const auto b = g->index_of(ep.b);
        if (a == b || g->intersection(a, b) < 1)
            throw InputError("blowup: no edge between '" + ep.a + "' and '" + ep.b + "'");
        lower(a);
        lower(b);
        for (auto e : g->edges()) {
            const bool hit = (e.a == ep.a && e.b == ep.b) || (e.a == ep.b && e.b == ep.a);
            if (hit) e.mult -= 1;
            if (e.mult > 0) es.push_back(e);
        }
        es.push_back({center.new_id, ep.a, 1});
        es.push_back({center.new_id, ep.b, 1});
    }
    vs.push_back({center.new_id, -1, -1});
    auto out = make_graph(g->name() + "+" + center.new_id, std::move(vs), es);
    return {out, {TowerStep::Kind::Blowup, center, center.new_id}};
}

SurgeryResult contract(const GraphPtr& g, const std::string& vertex) {
    const auto v = g->index_of(vertex);
    if (!g->is_exceptional_curve(v))
        throw PreconditionError("contract: '" + vertex + "' is not a rational (-1)-curve");
    if (g->size() == 1) throw PreconditionError("contract: cannot contract the only curve");

    std::vector<Vertex> vs;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < g->size(); ++i) {
        if (i == v) continue;
        const auto m = g->intersection(i, v);
        Vertex x = g->vertex(i);
        x.self_int += m * m;
        x.kappa -= m;
        vs.push_back(std::move(x));
        keep.push_back(i);
    }
    std::vector<Edge> es;
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b) {
            const auto i = keep[a], j = keep[b];
            const auto m = g->intersection(i, j) + g->intersection(i, v) * g->intersection(j, v);
            if (m != 0) es.push_back({g->id(i), g->id(j), m});
        }
    auto out = make_graph(g->name() + "-" + vertex, std::move(vs), es);

    // Record the centre when the image point is an ordinary point of E.
    std::optional<BlowupCenter> center;
    const auto nb = g->neighbors(v);
    if (nb.size() == 1 && g->intersection(nb[0], v) == 1)
        center = BlowupCenter{FreePoint{g->id(nb[0])}, vertex};
    else if (nb.size() == 2 && g->intersection(nb[0], v) == 1 && g->intersection(nb[1], v) == 1 &&
             out->intersection(out->index_of(g->id(nb[0])), out->index_of(g->id(nb[1]))) >= 1)
        center = BlowupCenter{EdgePoint{g->id(nb[0]), g->id(nb[1])}, vertex};
    return {out, {TowerStep::Kind::Contraction, center, vertex}};
}

Tower::Tower(GraphPtr base) { levels_.push_back(std::move(base)); }

Tower Tower::blown_up(const BlowupCenter& center) const {
    auto r = blowup(top(), center);
    Tower t = *this;
    t.levels_.push_back(r.graph);
    t.steps_.push_back(std::move(r.step));
    return t;
}

Tower Tower::contracted_below(const std::string& vertex) const {
    auto r = contract(base(), vertex);
    Tower t;
    t.levels_.reserve(levels_.size() + 1);
    t.levels_.push_back(r.graph);
    t.levels_.insert(t.levels_.end(), levels_.begin(), levels_.end());
    t.steps_.push_back(std::move(r.step));
    t.steps_.insert(t.steps_.end(), steps_.begin(), steps_.end());
    return t;
}

Tower Tower::truncated(std::size_t level) const {
    if (level > top_level()) throw InputError("truncated: level out of range");
    Tower t;
    t.levels_.assign(levels_.begin(), levels_.begin() + static_cast<std::ptrdiff_t>(level) + 1);
    t.steps_.assign(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(level));
    return t;
}

const GraphPtr& Tower::level(std::size_t k) const {
    if (k >= levels_.size())
        throw InputError("tower has no level " + std::to_string(k) + " (top is " +
                         std::to_string(top_level()) + ")");
    return levels_[k];
}

const TowerStep& Tower::step(std::size_t k) const {
    if (k >= steps_.size()) throw InputError("tower has no step " + std::to_string(k));
    return steps_[k];
}

void Tower::check() const {
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        const auto& upper = levels_[k + 1];
        const auto e = upper->find(steps_[k].exceptional);
        if (!e || !upper->is_exceptional_curve(*e))
            throw TheoremViolation("tower step " + std::to_string(k) + ": '" +
                                   steps_[k].exceptional + "' is not a (-1)-curve on level " +
                                   std::to_string(k + 1));
        if (!contract(upper, steps_[k].exceptional).graph->same_structure(*levels_[k]))
            throw TheoremViolation("tower step " + std::to_string(k) + " does not replay");
    }
    for (std::size_t k = 0; k < levels_.size(); ++k)
        if (!levels_[k]->is_valid())
            throw TheoremViolation("tower level " + std::to_string(k) + " is not a valid graph");
}

Cycle pullback(const Tower& t, std::size_t from, std::size_t to, const Cycle& w) {
    return pullback_impl(t, from, to, w);
}

QCycle pullback(const Tower& t, std::size_t from, std::size_t to, const QCycle& w) {
    return pullback_impl(t, from, to, w);
}

Cycle pushforward(const Tower& t, std::size_t from, std::size_t to, const Cycle& w) {
    if (to > from || from > t.top_level())
        throw InputError("pushforward: invalid levels " + std::to_string(from) + " -> " +
                         std::to_string(to));
    const Cycle src = on_level(t, from, w);
    const auto& g = t.level(to);
    Cycle out(g);
    for (std::size_t i = 0; i < g->size(); ++i) out[i] = src.at(g->id(i));
    return out;
}

Cycle relative_canonical(const Tower& t, std::size_t top, std::size_t bottom) {
    if (bottom > top || top > t.top_level())
        throw InputError("relative_canonical: invalid levels");
    Cycle k(t.level(top));
    for (std::size_t s = bottom; s < top; ++s) {
        const auto& g = t.level(s + 1);
        k += pullback(t, s + 1, top, Cycle::unit(g, g->index_of(t.step(s).exceptional)));
    }
    return k;
}

bool center_on_support(const Tower& t, std::size_t k, const Cycle& c_lower) {
    const auto& upper = *t.level(k + 1);
    const auto& lower = *c_lower.graph();
    const auto e = upper.index_of(t.step(k).exceptional);
    for (auto j : upper.neighbors(e))
        if (c_lower[lower.index_of(upper.id(j))] > 0) return true;
    return false;
}

CohomTrack transport_cohom(const Tower& t, const Cycle& base_c) {
    std::vector<Cycle> cs{on_level(t, 0, base_c)};
    if (!cs[0].is_effective())
        throw PreconditionError("transport_cohom: cohomological cycle must be effective");
    for (std::size_t k = 0; k < t.top_level(); ++k) {
        Cycle next = pullback_step(t, k, cs.back());
        if (center_on_support(t, k, cs.back())) {
            const auto e = t.level(k + 1)->index_of(t.step(k).exceptional);
            next[e] -= 1;
            if (next[e] < 0)
                throw PreconditionError("transport_cohom: negative coefficient on '" +
                                        t.step(k).exceptional + "'");
        }
        cs.push_back(std::move(next));
    }
    return CohomTrack(std::move(cs));
}

AssociatedPgCycle associated_pg_cycle(const Tower& t0, const Cycle& base_c, const Cycle& z,
                                      const std::vector<Branches>& h, const std::string& prefix) {
    Tower tower = t0;
    Cycle zc = on_level(tower, tower.top_level(), z);
    if (!is_antinef(zc)) throw PreconditionError("associated_pg_cycle: Z is not anti-nef");

    const auto& top = *tower.top();
    std::vector<Integer> count(top.size());
    std::vector<std::string> branch_at;
    for (const auto& b : h) {
        if (b.count < 0) throw InputError("associated_pg_cycle: negative branch count");
        count[top.index_of(b.vertex)] += b.count;
        for (int i = 0; i < b.count; ++i) branch_at.push_back(b.vertex);
    }
    for (std::size_t i = 0; i < top.size(); ++i)
        if (count[i] != -pair_with_vertex(zc, i))
            throw InputError("associated_pg_cycle: inconsistent branches on '" + top.id(i) + "': " +
                             count[i].get_str() + " given, Z.E = " +
                             pair_with_vertex(zc, i).get_str());

    Cycle c = transport_cohom(tower, base_c).at(tower.top_level());
    for (;;) {
        std::size_t hit = branch_at.size();
        for (std::size_t b = 0; b < branch_at.size() && hit == branch_at.size(); ++b)
            if (c.at(branch_at[b]) > 0) hit = b;
        if (hit == branch_at.size()) break;

        const auto id = fresh_id(*tower.top(), prefix);
        tower = tower.blown_up({FreePoint{branch_at[hit]}, id});
        const auto k = tower.top_level() - 1;
        const auto e = tower.top()->index_of(id);
        zc = pullback(tower, k, k + 1, zc);
        zc[e] += 1;
        Cycle next_c = pullback(tower, k, k + 1, c);
        next_c[e] -= 1;
        c = std::move(next_c);
        branch_at[hit] = id;
    }

    std::map<std::string, int> agg;
    for (const auto& v : branch_at) ++agg[v];
    std::vector<Branches> out;
    for (std::size_t i = 0; i < tower.top()->size(); ++i)
        if (auto it = agg.find(tower.top()->id(i)); it != agg.end())
            out.push_back({it->first, it->second});
    return {std::move(tower), std::move(zc), std::move(out)};
}

Tower minimal_tower(const GraphPtr& top) {
    Tower t(top);
    for (;;) {
        const auto& g = *t.base();
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < g.size() && !pick; ++i)
            if (g.is_exceptional_curve(i) && g.size() > 1) pick = i;
        if (!pick) return t;
        t = t.contracted_below(g.id(*pick));
    }
}

}  // namespace surfcore
