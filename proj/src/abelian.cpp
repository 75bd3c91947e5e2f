// Orbit membership under Aut(T + Z^r) for a finite abelian group T.
//
// Every automorphism of T + Z^r is block triangular: (t, z) -> (a(t) + b(z), c(z))
// with a in Aut(T), b in Hom(Z^r, T) and c in GL_r(Z). Hence (t, z) and (t', z')
// share an orbit iff gcd(z) = gcd(z') =: g and t' lies in Aut(T)(t) + gT.
// Aut(T) splits over the primary components, and inside a finite p-group two
// elements share an orbit iff their Ulm sequences (heights of x, px, p^2 x, ...)
// agree.

#include "lpaflow/exactla.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace lpaflow {

namespace {

constexpr long kInfiniteHeight = std::numeric_limits<long>::max();

std::optional<std::vector<Integer>> prime_divisors(Integer n, std::uint64_t trial_limit) {
    std::vector<Integer> primes;
    if (n < 2) return primes;
    for (std::uint64_t p = 2; p <= trial_limit; p += (p == 2 ? 1 : 2)) {
        const Integer pp(static_cast<unsigned long>(p));
        if (pp * pp > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.push_back(pp);
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            }
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) return std::nullopt;
        primes.push_back(n);
    }
    return primes;
}

long valuation(const Integer& x, const Integer& p) {
    if (x == 0) return kInfiniteHeight;
    Integer y = x;
    long v = 0;
    while (mpz_divisible_p(y.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

Integer power(const Integer& p, long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// The p-primary component of a torsion element: residues modulo p^{e_i}.
struct PrimaryPart {
    Integer prime;
    std::vector<long> exponents;
    IntVector residues;
};

PrimaryPart primary_part(const IntVector& torsion, std::span<const Integer> element, const Integer& p) {
    PrimaryPart part{p, {}, {}};
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        const long e = valuation(torsion[i], p);
        if (e == 0) continue;
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), element[i].get_mpz_t(), power(p, e).get_mpz_t());
        part.exponents.push_back(e);
        part.residues.push_back(std::move(r));
    }
    return part;
}

std::vector<long> ulm_sequence(const std::vector<long>& exponents, const IntVector& residues, const Integer& p) {
    const long top = exponents.empty() ? 0 : *std::max_element(exponents.begin(), exponents.end());
    std::vector<long> heights(static_cast<std::size_t>(top) + 1, kInfiniteHeight);
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        const long v = std::min(valuation(residues[i], p), exponents[i]);
        for (long k = 0; v + k < exponents[i]; ++k) {
            heights[static_cast<std::size_t>(k)] = std::min(heights[static_cast<std::size_t>(k)], v + k);
        }
    }
    return heights;
}

// Does some element of t + p^k T_p share an orbit with target?
Decision coset_meets_orbit(const PrimaryPart& t, const PrimaryPart& target, long k, std::uint64_t cap) {
    const Integer& p = t.prime;
    const auto goal = ulm_sequence(target.exponents, target.residues, p);

    std::vector<std::size_t> free_slots;
    Integer size = 1;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
        if (t.exponents[i] > k) {
            free_slots.push_back(i);
            size *= power(p, t.exponents[i] - k);
        }
    }
    if (size > Integer(static_cast<unsigned long>(cap))) return Decision::Unknown;

    IntVector counter(free_slots.size(), Integer(0));
    const Integer step = power(p, k);
    while (true) {
        IntVector s = t.residues;
        for (std::size_t a = 0; a < free_slots.size(); ++a) {
            const std::size_t i = free_slots[a];
            s[i] += step * counter[a];
            mpz_fdiv_r(s[i].get_mpz_t(), s[i].get_mpz_t(), power(p, t.exponents[i]).get_mpz_t());
        }
        if (ulm_sequence(t.exponents, s, p) == goal) return Decision::Yes;

        std::size_t a = 0;
        for (; a < free_slots.size(); ++a) {
            counter[a] += 1;
            if (counter[a] < power(p, t.exponents[free_slots[a]] - k)) break;
            counter[a] = 0;
        }
        if (a == free_slots.size()) break;
    }
    return Decision::No;
}

Integer content(std::span<const Integer> z) {
    Integer g = 0;
    for (const auto& x : z) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    return g;
}

}  // namespace

Decision pointed_equivalent(const PointedGroup& p, const PointedGroup& q, const PointedOptions& options) {
    if (!group_iso(p.group(), q.group())) return Decision::No;

    const IntVector& torsion = p.group().torsion();
    const std::size_t k = torsion.size();
    const std::span<const Integer> t(p.point().data(), k);
    const std::span<const Integer> t2(q.point().data(), k);
    const std::span<const Integer> z(p.point().data() + k, p.point().size() - k);
    const std::span<const Integer> z2(q.point().data() + k, q.point().size() - k);

    const Integer g = content(z);
    if (g != content(z2)) return Decision::No;
    if (torsion.empty()) return Decision::Yes;

    const auto primes = prime_divisors(torsion.back(), options.trial_division_limit);
    if (!primes) return Decision::Unknown;

    bool unknown = false;
    for (const Integer& prime : *primes) {
        const PrimaryPart a = primary_part(torsion, t, prime);
        const PrimaryPart b = primary_part(torsion, t2, prime);
        const long shift = g == 0 ? kInfiniteHeight : valuation(g, prime);
        const long top = *std::max_element(a.exponents.begin(), a.exponents.end());
        if (shift == 0) continue;  // gT_p = T_p absorbs everything
        if (shift >= top) {
            if (ulm_sequence(a.exponents, a.residues, prime) != ulm_sequence(b.exponents, b.residues, prime)) {
                return Decision::No;
            }
            continue;
        }
        const Decision d = coset_meets_orbit(a, b, shift, options.max_coset_size);
        if (d == Decision::No) return Decision::No;
        if (d == Decision::Unknown) unknown = true;
    }
    return unknown ? Decision::Unknown : Decision::Yes;
}

}  // namespace lpaflow
