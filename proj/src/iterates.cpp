#include "ordyn/iterates.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ordyn/numtheory.hpp"

namespace ordyn {

const Point& IterateTable::value_at(const Point& x) const {
    auto it = std::lower_bound(domain.begin(), domain.end(), x);
    if (it == domain.end() || !(*it == x))
        throw DomainError("point " + x.str() + " is not in the table domain");
    return values[static_cast<std::size_t>(it - domain.begin())];
}

bool IterateTable::same_function(const IterateTable& other) const {
    return domain == other.domain && values == other.values;
}

std::string IterateTable::to_json() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < domain.size(); ++i) {
        if (i) out << ",";
        out << "{\"point\": \"" << domain[i].str() << "\", \"value\": \"" << values[i].str()
            << "\"}";
    }
    out << "]";
    return out.str();
}

std::string IterateTable::to_csv() const {
    std::ostringstream out;
    out << "point,value\n";
    for (std::size_t i = 0; i < domain.size(); ++i)
        out << domain[i].str() << "," << values[i].str() << "\n";
    return out.str();
}

namespace {

Point apply_times(const DynMap& f, Point x, std::uint64_t k) {
    while (k--) x = f.apply(x);
    return x;
}

std::uint64_t cycle_offset(std::uint64_t residue, std::uint64_t transient, std::uint64_t period) {
    // least l in [0, period) with transient + l == residue (mod period)
    const std::uint64_t r = residue % period;
    const std::uint64_t m = transient % period;
    return (r + period - m) % period;
}

}  // namespace

PIterateResult p_iterate_point(OrbitAnalyzer& orbits, const ResidueSystem& p, const Point& x) {
    const OrbitRecord& rec = orbits.analyze(x);
    if (rec.unresolved()) return std::get<Unresolved>(rec.kind);
    if (rec.eventually_periodic()) {
        const EventuallyPeriodic& ep = rec.ep();
        const std::uint64_t l = cycle_offset(p.residue(ep.period), ep.transient, ep.period);
        return ep.listing[ep.transient + l];
    }
    const ConvergesToCycle& c = rec.ctc();
    const std::uint64_t phase = (c.phase + p.residue(c.period)) % c.period;
    return apply_times(orbits.map(), c.cycle_point, phase);
}

PIterateResult p_iterate_point(const DynMap& f, const ResidueSystem& p, const Point& x,
                               std::uint64_t budget) {
    OrbitAnalyzer orbits(f, budget);
    return p_iterate_point(orbits, p, x);
}

Point brute_force_p_iterate(const DynMap& f, const ResidueSystem& p, const Point& x,
                            std::uint64_t k_min, std::uint64_t budget) {
    OrbitRecord rec = orbit_analyze(f, x, budget);
    if (!rec.eventually_periodic())
        throw Error("brute_force_p_iterate: orbit of " + x.str() +
                    " did not resolve as eventually periodic");
    const EventuallyPeriodic& ep = rec.ep();
    const std::uint64_t r = p.residue(ep.period);
    std::uint64_t k = std::max<std::uint64_t>(k_min, ep.transient);
    k += (r % ep.period + ep.period - k % ep.period) % ep.period;
    const Point first = apply_times(f, x, k);
    const Point second = apply_times(f, x, k + ep.period);
    if (!(first == second))
        throw Error("brute_force_p_iterate: representatives k=" + std::to_string(k) + " and k=" +
                    std::to_string(k + ep.period) + " disagree at " + x.str());
    return first;
}

IterateTable p_iterate_table(const DynMap& f, const ResidueSystem& p,
                             const std::vector<Point>& truncation, std::uint64_t budget) {
    OrbitAnalyzer orbits(f, budget);
    IterateTable table;
    table.domain = truncation;
    std::sort(table.domain.begin(), table.domain.end());
    table.provenance = "f^p, p = " + p.describe();
    std::vector<Point> unresolved;
    for (const Point& x : table.domain) {
        PIterateResult r = p_iterate_point(orbits, p, x);
        if (std::holds_alternative<Unresolved>(r)) {
            unresolved.push_back(x);
            table.values.push_back(Point::zero());
        } else {
            table.values.push_back(std::get<Point>(r));
        }
    }
    if (!unresolved.empty()) {
        std::string msg = "p_iterate_table: unresolved orbit at";
        for (const Point& x : unresolved) msg += " " + x.str();
        throw PartialTableError(msg, std::move(unresolved));
    }
    return table;
}

IterateTable finite_iterate_table(const DynMap& f, std::uint32_t n,
                                  const std::vector<Point>& truncation) {
    IterateTable table;
    table.domain = truncation;
    std::sort(table.domain.begin(), table.domain.end());
    table.provenance = "f^" + std::to_string(n);
    for (const Point& x : table.domain) table.values.push_back(apply_times(f, x, n));
    return table;
}

IterateTable compose_tables(const IterateTable& outer, const IterateTable& inner) {
    IterateTable out;
    out.domain = inner.domain;
    out.provenance = "(" + outer.provenance + ") o (" + inner.provenance + ")";
    out.values.reserve(inner.values.size());
    for (const Point& v : inner.values) out.values.push_back(outer.value_at(v));
    return out;
}

std::size_t SemigroupTable::free_only_count() const {
    std::size_t n = 0;
    for (const SemigroupElement& e : elements)
        if (!e.free_reps.empty() && e.finite_reps.empty()) ++n;
    return n;
}

std::size_t SemigroupTable::free_count() const {
    std::size_t n = 0;
    for (const SemigroupElement& e : elements)
        if (!e.free_reps.empty()) ++n;
    return n;
}

SemigroupTable semigroup_table(const DynMap& f, const std::vector<Point>& truncation,
                               std::uint64_t moduli_bound, std::uint64_t budget) {
    std::vector<Point> domain = truncation;
    std::sort(domain.begin(), domain.end());

    auto in_domain = [&domain](const Point& x) {
        auto it = std::lower_bound(domain.begin(), domain.end(), x);
        return it != domain.end() && *it == x;
    };
    // The free part only needs resolvable orbits; finite iterates stabilize
    // (and composition closes over them) only on a closed truncation whose
    // points are all eventually periodic.
    bool full_table = true;
    for (const Point& x : domain) full_table = full_table && in_domain(f.apply(x));

    OrbitAnalyzer orbits(f, budget);
    std::uint64_t modulus = 1;
    std::uint32_t max_transient = 0;
    for (const Point& x : domain) {
        const OrbitRecord& rec = orbits.analyze(x);
        std::uint64_t period;
        if (rec.eventually_periodic()) {
            period = rec.ep().period;
            max_transient = std::max(max_transient, rec.ep().transient);
        } else if (rec.converges_to_cycle()) {
            period = rec.ctc().period;
            full_table = false;
        } else {
            throw PartialTableError("semigroup_table: unresolved orbit at " + x.str(), {x});
        }
        if (period > moduli_bound)
            throw DomainError("semigroup_table: period " + std::to_string(period) + " at " +
                              x.str() + " exceeds the moduli bound " +
                              std::to_string(moduli_bound));
        modulus = lcm_u64(modulus, period);
    }

    SemigroupTable result;
    result.modulus = modulus;
    result.horizon = full_table ? max_transient + static_cast<std::uint32_t>(modulus) : 0;

    std::map<std::vector<Point>, std::uint32_t> index_of;
    auto intern = [&](IterateTable table) -> std::uint32_t {
        auto it = index_of.find(table.values);
        if (it != index_of.end()) return it->second;
        const auto id = static_cast<std::uint32_t>(result.elements.size());
        index_of.emplace(table.values, id);
        result.elements.push_back(SemigroupElement{std::move(table), {}, {}});
        return id;
    };

    // Finite iterates f^1..f^horizon (f^n for n > horizon repeats f^(n - modulus)).
    std::vector<std::uint32_t> finite_elem(result.horizon + 1, 0);
    std::vector<Point> powers = domain;
    for (std::uint32_t n = 1; n <= result.horizon; ++n) {
        for (Point& v : powers) v = f.apply(v);
        IterateTable t;
        t.domain = domain;
        t.values = powers;
        t.provenance = "f^" + std::to_string(n);
        finite_elem[n] = intern(std::move(t));
        result.elements[finite_elem[n]].finite_reps.push_back(n);
    }
    // Free iterates: one table per residue trace mod the period lcm.
    std::vector<std::uint32_t> trace_index(modulus);
    for (std::uint64_t r = 0; r < modulus; ++r) {
        ResidueSystem p = ResidueSystem::table({Congruence{modulus, r}});
        IterateTable t;
        t.domain = domain;
        t.provenance = "f^p, p == " + std::to_string(r) + " (mod " + std::to_string(modulus) + ")";
        for (const Point& x : domain)
            t.values.push_back(std::get<Point>(p_iterate_point(orbits, p, x)));
        trace_index[r] = intern(std::move(t));
        result.elements[trace_index[r]].free_reps.push_back(r);
    }

    // Composition acts on the underlying global functions: exponents add,
    // a finite exponent joining a trace shifts it, and traces add. Finite
    // exponents beyond the horizon reduce by the modulus.
    const std::size_t n_elems = result.elements.size();
    result.composition.assign(n_elems, std::vector<std::uint32_t>(n_elems, 0));
    result.closed = true;
    auto finite_index = [&](std::uint64_t n) -> std::optional<std::uint32_t> {
        while (n > result.horizon && n >= modulus + max_transient + 1) n -= modulus;
        if (n == 0 || n > result.horizon) return std::nullopt;
        return finite_elem[n];
    };
    for (std::size_t i = 0; i < n_elems && result.closed; ++i) {
        const SemigroupElement& a = result.elements[i];
        for (std::size_t j = 0; j < n_elems && result.closed; ++j) {
            const SemigroupElement& b = result.elements[j];
            std::optional<std::uint32_t> target;
            if (!a.finite_reps.empty() && !b.finite_reps.empty()) {
                target = finite_index(static_cast<std::uint64_t>(a.finite_reps[0]) +
                                      b.finite_reps[0]);
            } else {
                // at least one side is free, so the composite is free
                std::uint64_t r;
                if (a.free_reps.empty())
                    r = (b.free_reps[0] + a.finite_reps[0]) % modulus;
                else if (b.free_reps.empty())
                    r = (a.free_reps[0] + b.finite_reps[0]) % modulus;
                else
                    r = (a.free_reps[0] + b.free_reps[0]) % modulus;
                target = trace_index[r];
            }
            if (!target) {
                result.closed = false;
                break;
            }
            result.composition[i][j] = *target;
        }
    }
    return result;
}

}  // namespace ordyn
