#include "surfcore/corpus.hpp"

#include <numeric>
#include <regex>

#include "surfcore/errors.hpp"
#include "surfcore/lattice.hpp"

namespace surfcore::corpus {

namespace {

std::string vid(int i, int n) { return n == 1 ? "E" : "E" + std::to_string(i); }

GraphPtr chain(const std::string& name, const std::vector<long>& selfs) {
    const int n = static_cast<int>(selfs.size());
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int i = 1; i <= n; ++i) {
        const long s = selfs[static_cast<std::size_t>(i - 1)];
        vs.push_back({vid(i, n), s, kappa_from_genus(0, s)});
        if (i > 1) es.push_back({vid(i - 1, n), vid(i, n), 1});
    }
    return make_graph(name, std::move(vs), es);
}

// -2 chain E1..E_len with extra -2 curves attached as (vertex, attach-to).
GraphPtr minus_two_tree(const std::string& name, int len,
                        const std::vector<std::pair<int, int>>& extra) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int i = 1; i <= len; ++i) {
        vs.push_back({"E" + std::to_string(i), -2, 0});
        if (i > 1) es.push_back({"E" + std::to_string(i - 1), "E" + std::to_string(i), 1});
    }
    for (auto [v, at] : extra) {
        vs.push_back({"E" + std::to_string(v), -2, 0});
        es.push_back({"E" + std::to_string(v), "E" + std::to_string(at), 1});
    }
    return make_graph(name, std::move(vs), es);
}

Entry plain(std::string name, std::string description, GraphPtr g) {
    Tower t(g);
    const bool gor = is_numerically_gorenstein(g) && canonical_cycle(g).is_zero();
    return {std::move(name), std::move(description), SingularityModel::make(g, 0, gor), t,
            {{"Zf", fundamental_cycle(g)}}};
}

GraphPtr ex244_min() {
    return make_graph("ex244min", {{"E0", -2, kappa_from_genus(1, -2)}}, {});
}

Entry ex244(bool blown) {
    auto base = ex244_min();
    auto model = SingularityModel::make(base, 1, true);
    Tower t(base);
    if (!blown)
        return {"ex244min", "x^2+y^4+z^4: minimal resolution, elliptic E0 with E0^2 = -2",
                model, t, {{"m", Cycle::unit(base, 0)}, {"m2", Integer(2) * Cycle::unit(base, 0)},
                           {"m3", Integer(3) * Cycle::unit(base, 0)}}};
    for (int i = 1; i <= 4; ++i) t = t.blown_up({FreePoint{"E0"}, "E" + std::to_string(i)});
    const auto& top = t.top();
    Cycle z = Cycle::from_map(top, {{"E0", 2}, {"E1", 3}, {"E2", 3}, {"E3", 3}, {"E4", 3}});
    return {"ex244blown", "x^2+y^4+z^4 blown up at the four base points of a general g in m^2",
            model, t, {{"Z", z}, {"m", pullback(t, 0, 4, Cycle::unit(base, 0))}}};
}

}  // namespace

const Cycle& Entry::cycle(const std::string& n) const {
    for (const auto& [k, c] : cycles)
        if (k == n) return c;
    throw InputError("corpus entry '" + name + "' has no cycle '" + n + "'");
}

std::vector<long> hirzebruch_jung(long n, long q) {
    if (n < 2 || q < 1 || q >= n || std::gcd(n, q) != 1)
        throw InputError("HJ(n,q) needs n >= 2, 1 <= q < n, gcd(n,q) = 1");
    std::vector<long> bs;
    long num = n, den = q;
    while (den != 0) {
        const long b = (num + den - 1) / den;  // ceiling
        bs.push_back(b);
        const long r = b * den - num;
        num = den;
        den = r;
    }
    return bs;
}

GraphPtr a_graph(int n) {
    if (n < 1) throw InputError("A_n needs n >= 1");
    return chain("A" + std::to_string(n), std::vector<long>(static_cast<std::size_t>(n), -2));
}

GraphPtr d_graph(int n) {
    if (n < 4) throw InputError("D_n needs n >= 4");
    return minus_two_tree("D" + std::to_string(n), n - 1, {{n, n - 2}});
}

GraphPtr e_graph(int n) {
    if (n < 6 || n > 8) throw InputError("E_n needs 6 <= n <= 8");
    return minus_two_tree("E" + std::to_string(n), n - 1, {{n, 3}});
}

GraphPtr hj_graph(long n, long q) {
    std::vector<long> selfs;
    for (long b : hirzebruch_jung(n, q)) selfs.push_back(-b);
    return chain("HJ(" + std::to_string(n) + "," + std::to_string(q) + ")", selfs);
}

Entry lookup(const std::string& name) {
    std::smatch m;
    if (std::regex_match(name, m, std::regex(R"(A(\d+))"))) {
        const int n = std::stoi(m[1]);
        return plain(name, "A_n rational double point", a_graph(n));
    }
    if (std::regex_match(name, m, std::regex(R"(D(\d+))")))
        return plain(name, "D_n rational double point", d_graph(std::stoi(m[1])));
    if (std::regex_match(name, m, std::regex(R"(E([678]))")))
        return plain(name, "E_n rational double point", e_graph(std::stoi(m[1])));
    if (std::regex_match(name, m, std::regex(R"(HJ\((\d+),(\d+)\))")))
        return plain(name, "cyclic quotient singularity",
                     hj_graph(std::stol(m[1]), std::stol(m[2])));
    if (name == "ex244min") return ex244(false);
    if (name == "ex244blown") return ex244(true);
    if (name == "A1b" || name == "A1chain") {
        auto base = a_graph(1);
        Tower t = Tower(base).blown_up({FreePoint{"E"}, "C1"});
        if (name == "A1b") {
            const auto& top = t.top();
            return {name, "A1 blown up at a general point of E", SingularityModel::make(base, 0, true),
                    t,
                    {{"Z", Cycle::from_map(top, {{"E", 1}, {"C1", 2}})},
                     {"m", pullback(t, 0, 1, Cycle::unit(base, 0))}}};
        }
        t = t.blown_up({FreePoint{"C1"}, "C2"});
        const auto& top = t.top();
        return {name, "A1 blown up twice along a curvilinear point: E(-3)-C1(-2)-C2(-1)",
                SingularityModel::make(base, 0, true), t,
                {{"Z", Cycle::from_map(top, {{"E", 2}, {"C1", 4}, {"C2", 5}})},
                 {"Zgood", Cycle::from_map(top, {{"E", 2}, {"C1", 2}, {"C2", 2}})},
                 {"m", pullback(t, 0, 2, Cycle::unit(base, 0))}}};
    }
    if (std::regex_match(name, m, std::regex(R"(cone\((\d+),(\d+),(\d+)\))"))) {
        auto cm = cone_model(std::stol(m[1]), std::stol(m[2]), std::stol(m[3]));
        return {name, "graded cone over a curve of genus g, blown up to the associated p_g-ideal",
                cm.model, cm.ideal.tower,
                {{"Z", cm.ideal.z},
                 {"m", pullback(cm.ideal.tower, 0, cm.ideal.tower.top_level(),
                                Cycle::unit(cm.model.base(), 0))}}};
    }
    throw InputError("unknown corpus entry '" + name + "'");
}

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (int n = 1; n <= 9; ++n) out.push_back("A" + std::to_string(n));
    for (int n = 4; n <= 8; ++n) out.push_back("D" + std::to_string(n));
    for (int n = 6; n <= 8; ++n) out.push_back("E" + std::to_string(n));
    for (const char* s : {"HJ(5,2)", "ex244min", "ex244blown", "A1b", "A1chain", "cone(2,2,1)"})
        out.emplace_back(s);
    return out;
}

}  // namespace surfcore::corpus
