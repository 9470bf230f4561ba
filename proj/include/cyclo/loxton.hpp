#pragma once

// Loxton profiles and shortest sums of roots of unity over Q (E = {1}).

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclo/cycnum.hpp"

namespace cyclo {

/// Stand-in for a Loxton pair (B, E) together with the function L, given as a
/// nondecreasing step function x -> d_max.
class LoxtonProfile {
public:
    LoxtonProfile(BigRational B, std::vector<CycNum> E, std::vector<std::pair<BigRational, long>> steps)
        : B_(std::move(B)), E_(std::move(E)), steps_(std::move(steps))
    {
        if (B_ <= 0) {
            throw DomainError("Loxton constant B must be positive");
        }
        if (E_.empty()) {
            throw DomainError("Loxton coefficient set E must be nonempty");
        }
        std::sort(steps_.begin(), steps_.end());
        for (std::size_t i = 1; i < steps_.size(); ++i) {
            if (steps_[i].second < steps_[i - 1].second) {
                throw DomainError("Loxton budget must be nondecreasing");
            }
        }
    }

    /// B = 1, E = {1} and a budget of d terms everywhere.
    static LoxtonProfile constant(long d, BigRational B = BigRational(1))
    {
        return {std::move(B), {CycNum(1)}, {{BigRational(0), d}}};
    }

    /// Budget that is zero everywhere.
    static LoxtonProfile empty() { return {BigRational(1), {CycNum(1)}, {}}; }

    const BigRational& B() const { return B_; }
    const std::vector<CycNum>& E() const { return E_; }

    /// Largest admissible term count at x (the value standing in for L(x)).
    long budget(const BigRational& x) const
    {
        long d = 0;
        for (const auto& [threshold, dmax] : steps_) {
            if (threshold <= x) {
                d = dmax;
            }
        }
        return d;
    }

    long budget_for(const BigRational& A) const { return budget(A * B_); }

    bool contains(const CycNum& e) const { return std::find(E_.begin(), E_.end(), e) != E_.end(); }

private:
    BigRational B_;
    std::vector<CycNum> E_;
    std::vector<std::pair<BigRational, long>> steps_;
};

struct LoxtonTerm {
    CycNum e;
    RootOfUnity xi;
};

struct LoxtonDecomposition {
    std::vector<LoxtonTerm> terms;
    /// Every xi was drawn from the roots of unity of this order, lcm(2, n).
    long search_order = 2;
};

namespace detail {

/// Calls visit(indices) for every nondecreasing index tuple of the given size
/// over [0, m), in lexicographic order; stops when visit returns true.
inline bool for_each_multiset(long m, long size, const std::function<bool(const std::vector<long>&)>& visit)
{
    std::vector<long> idx(static_cast<std::size_t>(size), 0);
    if (size == 0) {
        return visit(idx);
    }
    while (true) {
        if (visit(idx)) {
            return true;
        }
        long pos = size - 1;
        while (pos >= 0 && idx[pos] == m - 1) {
            --pos;
        }
        if (pos < 0) {
            return false;
        }
        ++idx[pos];
        for (long k = pos + 1; k < size; ++k) {
            idx[k] = idx[pos];
        }
    }
}

inline double multiset_count(long m, long size)
{
    double c = 1;
    for (long i = 1; i <= size; ++i) {
        c = c * static_cast<double>(m + i - 1) / static_cast<double>(i);
    }
    return c;
}

} // namespace detail

/// Shortest representation of an algebraic integer as a sum of at most d_max
/// roots of unity of order lcm(2, conductor), by meet-in-the-middle search.
inline std::optional<LoxtonDecomposition> loxton_decompose(const CycNum& a, long d_max)
{
    if (!a.is_integral()) {
        throw DomainError("Loxton decomposition requires an algebraic integer");
    }
    if (d_max < 1) {
        throw DomainError("d_max must be at least 1");
    }
    const long n = a.conductor();
    auto table = detail::torsion_table(n);
    const long M = table->order;
    LoxtonDecomposition out;
    out.search_order = M;
    if (a.is_zero()) {
        return out;
    }
    std::vector<long long> target;
    for (const auto& c : a.numerators()) {
        if (!c.fits_slong_p()) {
            return std::nullopt;
        }
        target.push_back(c.get_si());
    }
    const std::size_t dim = target.size();
    auto accumulate = [&](const std::vector<long>& idx) {
        std::vector<long long> s(dim, 0);
        for (long j : idx) {
            const auto& v = table->coords[static_cast<std::size_t>(j)];
            for (std::size_t i = 0; i < dim; ++i) {
                s[i] += v[i];
            }
        }
        return s;
    };

    for (long d = 1; d <= d_max; ++d) {
        const long half = d / 2;
        const long rest = d - half;
        if (detail::multiset_count(M, rest) > 5e7) {
            throw ResourceError("Loxton search space too large");
        }
        std::unordered_map<std::string, std::vector<long>> halves;
        detail::for_each_multiset(M, half, [&](const std::vector<long>& idx) {
            halves.emplace(detail::torsion_key(accumulate(idx)), idx);
            return false;
        });
        std::vector<long> found;
        detail::for_each_multiset(M, rest, [&](const std::vector<long>& idx) {
            auto s = accumulate(idx);
            for (std::size_t i = 0; i < dim; ++i) {
                s[i] = target[i] - s[i];
            }
            auto it = halves.find(detail::torsion_key(s));
            if (it == halves.end()) {
                return false;
            }
            found = idx;
            found.insert(found.end(), it->second.begin(), it->second.end());
            return true;
        });
        if (!found.empty()) {
            std::sort(found.begin(), found.end());
            for (long j : found) {
                out.terms.push_back({CycNum(1), RootOfUnity(M, j)});
            }
            return out;
        }
    }
    return std::nullopt;
}

} // namespace cyclo
