#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "surfcore/cycle.hpp"
#include "surfcore/graph.hpp"

namespace surfcore {

/// General point on one exceptional curve.
struct FreePoint {
    std::string vertex;
};

/// Intersection point of two exceptional curves.
struct EdgePoint {
    std::string a;
    std::string b;
};

struct BlowupCenter {
    std::variant<FreePoint, EdgePoint> where;
    std::string new_id;
};

/// Links level k to level k+1 of a tower. Level k+1 always carries one more
/// vertex than level k: the rational (-1)-curve `exceptional`. A Blowup step
/// was produced by blowing level k up at `center`; a Contraction step by
/// contracting `exceptional` on level k+1.
struct TowerStep {
    enum class Kind { Blowup, Contraction };
    Kind kind = Kind::Blowup;
    std::optional<BlowupCenter> center;
    std::string exceptional;
};

struct SurgeryResult {
    GraphPtr graph;
    TowerStep step;
};

/// Blow up a point; the new vertex is appended after the existing ones.
SurgeryResult blowup(const GraphPtr& g, const BlowupCenter& center);

/// Contract a rational (-1)-curve.
SurgeryResult contract(const GraphPtr& g, const std::string& vertex);

/// Chain of resolutions X_0 <- X_1 <- ... <- X_top, each arrow the
/// contraction of one rational (-1)-curve. Level 0 is the most contracted.
class Tower {
public:
    explicit Tower(GraphPtr base);

    /// Tower over a new top level obtained by blowing up the current top.
    Tower blown_up(const BlowupCenter& center) const;
    /// Tower with a new bottom level obtained by contracting `vertex` on the
    /// current bottom. Existing levels shift up by one.
    Tower contracted_below(const std::string& vertex) const;
    /// Levels 0..level only.
    Tower truncated(std::size_t level) const;

    std::size_t size() const { return levels_.size(); }
    std::size_t top_level() const { return levels_.size() - 1; }
    const GraphPtr& level(std::size_t k) const;
    const GraphPtr& base() const { return levels_.front(); }
    const GraphPtr& top() const { return levels_.back(); }
    /// Step linking level k and k+1.
    const TowerStep& step(std::size_t k) const;

    /// Replays every step and checks the invariants; throws TheoremViolation.
    void check() const;

private:
    Tower() = default;
    std::vector<GraphPtr> levels_;
    std::vector<TowerStep> steps_;
};

/// Total transform from `from` up to `to >= from`.
Cycle pullback(const Tower& t, std::size_t from, std::size_t to, const Cycle& w);
QCycle pullback(const Tower& t, std::size_t from, std::size_t to, const QCycle& w);

/// Direct image from `from` down to `to <= from`: drops contracted coordinates.
Cycle pushforward(const Tower& t, std::size_t from, std::size_t to, const Cycle& w);

/// K_{X_top/X_bottom}: the sum over the steps of the total transforms of the
/// exceptional curves.
Cycle relative_canonical(const Tower& t, std::size_t top, std::size_t bottom);

/// Cohomological cycle at every level of a tower.
class CohomTrack {
public:
    explicit CohomTrack(std::vector<Cycle> levels) : levels_(std::move(levels)) {}
    const Cycle& at(std::size_t k) const { return levels_.at(k); }
    std::size_t size() const { return levels_.size(); }

private:
    std::vector<Cycle> levels_;
};

/// True if the point blown up by step k lies on supp C (C at level k): some
/// neighbour of the new curve on level k+1 has a positive C-coefficient.
bool center_on_support(const Tower& t, std::size_t k, const Cycle& c_lower);

/// Transport of the cohomological cycle from level 0 upward:
/// C' = pullback(C) - E_new when the centre lies on supp C, pullback(C)
/// otherwise.
CohomTrack transport_cohom(const Tower& t, const Cycle& base_c);

/// Strict transform of a general function: number of transverse branches
/// meeting each curve.
struct Branches {
    std::string vertex;
    int count = 0;
};

struct AssociatedPgCycle {
    Tower tower;
    Cycle z;
    std::vector<Branches> branches;  // incidence on the final top level
};

/// Blows up the points where branches of the strict transform meet supp C
/// until they are disjoint. New vertices are named `prefix` + smallest free
/// integer suffix starting at 1.
AssociatedPgCycle associated_pg_cycle(const Tower& t0, const Cycle& base_c, const Cycle& z,
                                      const std::vector<Branches>& h,
                                      const std::string& prefix = "E");

/// Contracts rational (-1)-curves (smallest vertex index first) until none is
/// left; the returned tower has `top` as its top level and a minimal graph as
/// its base.
Tower minimal_tower(const GraphPtr& top);

}  // namespace surfcore
