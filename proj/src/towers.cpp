#include "ttower/towers.hpp"

#include <chrono>

#include "ttower/cyclotomic.hpp"
#include "ttower/division_poly.hpp"
#include "ttower/tables.hpp"

namespace ttower {

using nlohmann::json;

namespace {

// largest divisor of v supported by the tower's subfield lattice
std::uint64_t tower_available_part(const FieldSpec& tower, std::uint64_t v) {
    switch (tower.tower) {
        case TowerKind::K:
            return v;
        case TowerKind::K5: {
            std::uint64_t r = v;
            for (std::uint64_t p : {2ull, 3ull})
                while (r % p == 0) r /= p;
            return r;
        }
        case TowerKind::ZP: {
            std::uint64_t r = 1;
            while (v % tower.p == 0) {
                v /= tower.p;
                r *= tower.p;
            }
            return r;
        }
        case TowerKind::CYCLO_TOWER:
            throw std::logic_error("tower_available_part: cyclotomic towers use level bounds");
    }
    throw std::logic_error("unreachable");
}

// is some point degree from the table realizable inside the tower?
bool degree_options_meet_tower(const FieldSpec& tower, long ell, std::uint64_t phi_m) {
    DegreeOptions opts = point_degree_options(ell);
    if (!opts.tabulated) return true; // parametric rows: never used as a sole filter
    for (long d : opts.proven) {
        if (phi_m % static_cast<std::uint64_t>(d) != 0) continue; // must also divide phi(m)
        if (tower.tower == TowerKind::CYCLO_TOWER) {
            // subfield degrees of Q(zeta_{p^infinity}) are d' p^e with d' | p-1
            std::uint64_t dd = static_cast<std::uint64_t>(d);
            while (dd % tower.p == 0) dd /= tower.p;
            if ((tower.p - 1) % dd == 0) return true;
            continue;
        }
        if (tower_available_part(tower, static_cast<std::uint64_t>(d)) ==
            static_cast<std::uint64_t>(d))
            return true;
    }
    return false;
}

// cyclotomic-tower level bound for Q(P), P of exact prime-power order m
unsigned cyclo_level_bound(std::uint64_t p, long m) {
    auto fac = factorize_u64(static_cast<std::uint64_t>(m));
    std::uint64_t ell = fac.begin()->first;
    std::uint64_t phi_m = euler_phi_u64(static_cast<std::uint64_t>(m));
    if (ell == p) {
        // p-power torsion over the p-tower: the full-level subgroup cases push
        // the field up to the theorem levels
        if (p == 2) return 6;
        if (p == 3) return m == 3 ? 1 : 3;
        return static_cast<unsigned>(valuation_u64(phi_m, p)) + 1;
    }
    if (ell == 2) {
        // 2-power points over an odd tower are forced down to small levels
        if (p == 3) return 3;
        return 1;
    }
    if (p == 2) {
        // odd-order points over the 2-tower: Q(P) has 2-power degree
        // 2^v, and every such subfield lies in Q(zeta_{2^{v+2}})
        return static_cast<unsigned>(valuation_u64(phi_m, 2)) + 2;
    }
    return static_cast<unsigned>(valuation_u64(phi_m, p)) + 1;
}

std::string group_note(const TorsionStructure& g) { return g.str(); }

} // namespace

json TorsionReport::to_json() const {
    json j;
    j["schema"] = "report/1";
    j["curve"] = curve_label;
    j["field"] = field.str();
    j["group"] = {{"a", group.a}, {"b", group.b}, {"name", group.str()}};
    j["indeterminate"] = indeterminate;
    j["evidence"] = json::array();
    for (const auto& ev : evidence) {
        json e;
        e["order"] = ev.m;
        switch (ev.verdict) {
            case Verdict::WITNESS: e["verdict"] = "WITNESS"; break;
            case Verdict::CERTIFIED_ABSENT: e["verdict"] = "CERTIFIED_ABSENT"; break;
            case Verdict::FILTERED_ABSENT: e["verdict"] = "FILTERED_ABSENT"; break;
            case Verdict::INDETERMINATE: e["verdict"] = "INDETERMINATE"; break;
        }
        if (ev.search_field) e["search_field"] = ev.search_field->str();
        if (!ev.note.empty()) e["note"] = ev.note;
        if (ev.cert) e["certificate"] = ev.cert->to_json();
        if (!ev.x_minpoly.is_zero()) e["x_minpoly"] = ev.x_minpoly.str();
        if (ev.y_obstructed) e["y_obstructed"] = true;
        e["millis"] = ev.millis; // timing field
        j["evidence"].push_back(std::move(e));
    }
    j["millis"] = total_millis; // timing field
    return j;
}

std::vector<CandidatePlan> plan_tower_candidates(const FieldSpec& tower) {
    if (!tower.is_tower()) throw std::invalid_argument("plan_tower_candidates: tower required");
    const auto& tables = knowledge_tables();
    std::vector<CandidatePlan> plans;
    for (long m : tables.admissible_prime_power_orders) {
        if (m == 2) continue; // the 2-division cubic handles order 2 directly
        CandidatePlan plan;
        plan.m = m;
        auto fac = factorize_u64(static_cast<std::uint64_t>(m));
        long ell = static_cast<long>(fac.begin()->first);
        unsigned a = fac.begin()->second;
        std::uint64_t phi_m = euler_phi_u64(static_cast<std::uint64_t>(m));

        if (tower.tower == TowerKind::CYCLO_TOWER) {
            plan.field = FieldSpec::cyclo(tower.p, cyclo_level_bound(tower.p, m));
            if (a == 1 && ell != static_cast<long>(tower.p) &&
                !degree_options_meet_tower(tower, ell, phi_m)) {
                plan.field.reset();
                plan.note = "no admissible point degree lies in the tower";
            }
            plans.push_back(std::move(plan));
            continue;
        }

        // real procyclic towers (K, K5, Z_p): everything is totally real, so
        // odd-order parts are cyclic and come with a rational m-isogeny
        std::uint64_t bound;
        if (ell == 2) {
            // [Q(P):Q(2P)] divides 4 at every halving step, and an order-2
            // point has degree 1, 2 or 3
            bound = 1;
            for (unsigned i = 1; i < a; ++i) bound *= 4;
            bound *= 6; // lcm of the order-2 degrees' contributions
        } else {
            bound = phi_m;
        }
        std::uint64_t avail = tower_available_part(tower, bound);
        if (a == 1 && ell != 2 && !degree_options_meet_tower(tower, ell, phi_m)) {
            plan.note = "no admissible point degree lies in the tower";
            plans.push_back(std::move(plan));
            continue;
        }
        if (avail == 1) {
            plan.field = FieldSpec::Q();
            plan.note = "degree filter confines Q(P) to Q";
            plans.push_back(std::move(plan));
            continue;
        }
        plan.field = unique_subfield(tower, avail);
        plans.push_back(std::move(plan));
    }
    return plans;
}

namespace {

// 2-division cubic roots available anywhere inside the tower
unsigned two_rank_over_tower(const Curve& E, const FieldSpec& tower, const SearchConfig& cfg) {
    RationalPoly cubic;
    cubic.c = {E.b6, 2 * E.b4, E.b2, Rat(4)};
    cubic.normalize();
    auto count_in = [&](const FieldSpec& f) {
        const SubfieldPresentation& pres = field_presentation(f);
        NumberField NF = pres.as_number_field();
        return static_cast<unsigned>(nf_roots_of(NF, cubic, cfg.factor).size());
    };
    switch (tower.tower) {
        case TowerKind::K: {
            // roots of degree 1, 2, 3 live in Q, Q_{1,2}, Q_{1,3} respectively
            auto deg6 = FieldSpec::compositum({FieldSpec::layer(2, 1), FieldSpec::layer(3, 1)});
            return count_in(deg6);
        }
        case TowerKind::K5:
            return static_cast<unsigned>(rational_roots(cubic, cfg.factor).size());
        case TowerKind::ZP:
            if (tower.p == 2) return count_in(FieldSpec::layer(2, 1));
            if (tower.p == 3) return count_in(FieldSpec::layer(3, 1));
            return static_cast<unsigned>(rational_roots(cubic, cfg.factor).size());
        case TowerKind::CYCLO_TOWER:
            if (tower.p == 2) return count_in(FieldSpec::cyclo(2, 3));
            if (tower.p == 3) return count_in(FieldSpec::cyclo(3, 2));
            return count_in(FieldSpec::cyclo(tower.p, 1));
    }
    throw std::logic_error("unreachable");
}

} // namespace

TorsionReport torsion_over_tower(const Curve& E, const FieldSpec& tower, const SearchConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    if (!tower.is_tower()) throw std::invalid_argument("torsion_over_tower: tower required");
    TorsionReport rep;
    rep.curve_label = E.label;
    rep.field = tower;

    TorsionQResult base = torsion_over_Q(E, cfg.factor);

    unsigned r2 = two_rank_over_tower(E, tower, cfg);
    long two_part = r2 > 0 ? 2 : 1;
    long odd_part = 1;
    {
        OrderResolution ev;
        ev.m = 2;
        ev.verdict = r2 > 0 ? Verdict::WITNESS : Verdict::CERTIFIED_ABSENT;
        ev.note = "2-division cubic has " + std::to_string(r2) + " roots in the tower";
        rep.evidence.push_back(std::move(ev));
    }

    // over a cyclotomic tower the subfields are totally ordered by level, so
    // the group at the stabilization bound is computed exactly there (small
    // fields), and candidates beyond it only need absence certificates
    std::optional<TorsionStructure> level_group;
    if (tower.tower == TowerKind::CYCLO_TOWER) {
        FiniteTorsionResult gl = torsion_over_finite_field(
            E, FieldSpec::cyclo(tower.p, static_cast<unsigned>(stabilization_bound(tower.p))), cfg);
        level_group = gl.group;
    }

    std::set<long> absent;
    if (r2 == 0) absent.insert(2);
    for (const CandidatePlan& plan : plan_tower_candidates(tower)) {
        if (cfg.over_budget()) {
            rep.indeterminate = true;
            OrderResolution ev;
            ev.m = plan.m;
            ev.verdict = Verdict::INDETERMINATE;
            ev.note = "case budget exceeded";
            rep.evidence.push_back(std::move(ev));
            continue;
        }
        OrderResolution ev;
        ev.m = plan.m;
        ev.search_field = plan.field;
        ev.note = plan.note;
        auto fac = factorize_u64(static_cast<std::uint64_t>(plan.m));
        long ell = static_cast<long>(fac.begin()->first);
        if (plan.m / ell > 1 && absent.count(plan.m / ell)) {
            ev.verdict = Verdict::FILTERED_ABSENT;
            ev.note = "no point of order " + std::to_string(plan.m / ell);
            absent.insert(plan.m);
            rep.evidence.push_back(std::move(ev));
            continue;
        }
        if (!plan.field) {
            ev.verdict = Verdict::FILTERED_ABSENT;
            absent.insert(plan.m);
            rep.evidence.push_back(std::move(ev));
            continue;
        }
        if (plan.field->is_rationals()) {
            bool witness = base.group.b % plan.m == 0;
            ev.verdict = witness ? Verdict::WITNESS : Verdict::FILTERED_ABSENT;
            ev.note += (ev.note.empty() ? "" : "; ") + std::string("resolved by E(Q) torsion ") +
                       base.group.str();
            if (!witness) absent.insert(plan.m);
            if (witness) {
                if (ell == 2)
                    two_part = std::max(two_part, plan.m);
                else {
                    long cur = 1, tmp = odd_part;
                    while (tmp % ell == 0) { tmp /= ell; cur *= ell; }
                    if (plan.m > cur) odd_part = odd_part / cur * plan.m;
                }
            }
            rep.evidence.push_back(std::move(ev));
            continue;
        }
        if (level_group && level_group->b % plan.m == 0) {
            // already witnessed exactly at the stabilization-bound level
            ev.verdict = Verdict::WITNESS;
            ev.search_field = FieldSpec::cyclo(tower.p, static_cast<unsigned>(stabilization_bound(tower.p)));
            ev.note += (ev.note.empty() ? "" : "; ") +
                       std::string("witnessed in the level-bound field, group ") + level_group->str();
            if (ell == 2)
                two_part = std::max(two_part, plan.m);
            else {
                long cur = 1, tmp = odd_part;
                while (tmp % ell == 0) { tmp /= ell; cur *= ell; }
                if (plan.m > cur) odd_part = odd_part / cur * plan.m;
            }
            rep.evidence.push_back(std::move(ev));
            continue;
        }
        PointSearch ps = torsion_point_over_field(E, plan.m, *plan.field, cfg);
        ev.verdict = ps.verdict;
        ev.cert = ps.cert;
        ev.x_minpoly = ps.x_minpoly;
        ev.y_obstructed = ps.y_obstructed;
        ev.millis = ps.millis;
        if (!ps.note.empty()) ev.note += (ev.note.empty() ? "" : "; ") + ps.note;
        if (ps.verdict == Verdict::WITNESS) {
            if (ell == 2)
                two_part = std::max(two_part, plan.m);
            else {
                long cur = 1, tmp = odd_part;
                while (tmp % ell == 0) { tmp /= ell; cur *= ell; }
                if (plan.m > cur) odd_part = odd_part / cur * plan.m;
            }
        } else if (ps.verdict == Verdict::INDETERMINATE) {
            rep.indeterminate = true;
        } else {
            absent.insert(plan.m);
        }
        rep.evidence.push_back(std::move(ev));
    }

    // group shape: full 2-torsion iff the cubic splits inside the tower;
    // Z/4 + Z/4 and full odd levels need roots of unity and only occur over
    // the cyclotomic towers
    long full2 = r2 == 3 ? 2 : 1;
    long full_odd = 1;
    if (tower.tower == TowerKind::CYCLO_TOWER) {
        // full levels require roots of unity, so they are already visible at
        // the stabilization-bound level computed exactly above
        if (level_group) {
            rep.group.b = std::max(two_part * odd_part, level_group->b);
            rep.group.a = level_group->a;
            if (rep.group.a > 1 && rep.group.b % rep.group.a != 0)
                throw std::logic_error("torsion_over_tower: inconsistent group shape");
            rep.total_millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - t0)
                                   .count();
            return rep;
        }
    }
    rep.group.b = two_part * odd_part;
    rep.group.a = full2 * full_odd;
    if (rep.group.a > 1 && rep.group.b % rep.group.a != 0)
        throw std::logic_error("torsion_over_tower: inconsistent group shape");
    if (tower.tower == TowerKind::K && !rep.indeterminate && !in_K_torsion_list(rep.group))
        throw std::logic_error("torsion_over_tower: group " + rep.group.str() +
                               " outside the K classification");
    rep.total_millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    return rep;
}

TorsionReport torsion_over_field_report(const Curve& E, const FieldSpec& field,
                                        const SearchConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    TorsionReport rep;
    rep.curve_label = E.label;
    rep.field = field;
    if (field.is_rationals()) {
        TorsionQResult base = torsion_over_Q(E, cfg.factor);
        rep.group = base.group;
    } else {
        FiniteTorsionResult r = torsion_over_finite_field(E, field, cfg);
        rep.group = r.group;
        for (auto& ps : r.evidence) {
            OrderResolution ev;
            ev.m = ps.m;
            ev.verdict = ps.verdict;
            ev.search_field = field;
            ev.note = ps.note;
            ev.cert = ps.cert;
            ev.x_minpoly = ps.x_minpoly;
            ev.y_obstructed = ps.y_obstructed;
            ev.millis = ps.millis;
            rep.evidence.push_back(std::move(ev));
        }
    }
    rep.total_millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    return rep;
}

long stabilization_level(const Curve& E, std::uint64_t p, const SearchConfig& cfg,
                         std::vector<TorsionStructure>* levels, TorsionStructure* tower_group_out) {
    TorsionReport tower = torsion_over_tower(E, FieldSpec::tower_cyclo(p), cfg);
    if (tower.indeterminate)
        throw resource_exhausted("stabilization_level: tower torsion INDETERMINATE");
    if (tower_group_out) *tower_group_out = tower.group;
    long bound = stabilization_bound(p);
    long found = 0;
    for (long k = 1; k <= bound + 1; ++k) {
        FiniteTorsionResult lvl = torsion_over_finite_field(E, FieldSpec::cyclo(p, static_cast<unsigned>(k)), cfg);
        if (levels) levels->push_back(lvl.group);
        if (found == 0 && lvl.group == tower.group) {
            found = k;
            break;
        }
    }
    if (found == 0)
        throw std::logic_error("stabilization_level: no level up to the theorem bound matches " +
                               group_note(tower.group));
    if (found > bound)
        throw std::logic_error("stabilization_level: exceeds the theorem bound");
    return found;
}

bool in_K_torsion_list(const TorsionStructure& t) {
    if (t.a == 1) return (t.b >= 1 && t.b <= 10) || t.b == 12 || t.b == 13 || t.b == 21 || t.b == 27;
    if (t.a == 2) return t.b == 2 || t.b == 4 || t.b == 6 || t.b == 8;
    return false;
}

long stabilization_bound(std::uint64_t p) {
    if (p == 2) return 4;
    if (p == 3) return 3;
    return 1;
}

} // namespace ttower
