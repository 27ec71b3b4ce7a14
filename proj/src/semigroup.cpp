// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "errors.hpp"

namespace wilf {

namespace {

// Conductor + multiplicity windows larger than this raise Overflow; the
// closure of any enumeration-scale input fits comfortably.
constexpr std::int64_t kMaxWindowBits = std::int64_t{1} << 28;

std::vector<std::int64_t> sorted_unique_positive(std::span<const std::int64_t> in,
                                                 const char* what) {
    if (in.empty())
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " list is empty");
    std::vector<std::int64_t> v(in.begin(), in.end());
    for (std::int64_t x : v)
        if (x < 1)
            throw Error(ErrorCode::InvalidArgument,
                        std::string(what) + " must be positive, got " + std::to_string(x));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::int64_t> gens) {
    std::vector<std::int64_t> g = sorted_unique_positive(gens, "generators");

    std::int64_t d = 0;
    for (std::int64_t x : g) d = std::gcd(d, x);
    if (d != 1)
        throw Error(ErrorCode::GcdNotOne, "gcd of generators is " + std::to_string(d));

    const std::int64_t m = g.front();

    // Boolean coin sieve over a doubling window until m consecutive members
    // appear; everything beyond that run is in S, which pins the conductor.
    std::int64_t window = 256;
    while (true) {
        Bitmap sieve(static_cast<std::size_t>(window));
        sieve.set(0);
        std::int64_t conductor = -1;
        std::int64_t run = 0;
        for (std::int64_t n = 0; n < window; ++n) {
            bool member = n == 0;
            if (!member) {
                for (std::int64_t gen : g) {
                    if (gen > n) break;
                    if (sieve.test(static_cast<std::size_t>(n - gen))) {
                        member = true;
                        break;
                    }
                }
                if (member) sieve.set(static_cast<std::size_t>(n));
            }
            if (member) {
                if (++run == m) {
                    conductor = n - m + 1;
                    break;
                }
            } else {
                run = 0;
            }
        }
        if (conductor >= 0) {
            NumericalSemigroup s;
            s.conductor_ = conductor;
            s.multiplicity_ = m;
            const std::int64_t w = conductor + m;
            s.membership_ = Bitmap(static_cast<std::size_t>(w));
            for (std::int64_t n = 0; n < w; ++n)
                if (sieve.test(static_cast<std::size_t>(n)))
                    s.membership_.set(static_cast<std::size_t>(n));
            s.compute_atoms();
            return s;
        }
        if (window >= kMaxWindowBits)
            throw_overflow("closure of <" + std::to_string(g.front()) + ",...> (window cap)");
        window = std::min(checked_mul(window, 2), kMaxWindowBits);
    }
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const std::int64_t> gaps) {
    if (gaps.empty()) return naturals();
    std::vector<std::int64_t> gs = sorted_unique_positive(gaps, "gaps");

    const std::int64_t conductor = checked_add(gs.back(), 1);
    if (conductor >= kMaxWindowBits) throw_overflow("gap window");

    Bitmap is_gap(static_cast<std::size_t>(conductor));
    for (std::int64_t x : gs) is_gap.set(static_cast<std::size_t>(x));

    // Complement must be additively closed; report the lexicographically
    // first pair a <= b with a, b in S and a + b a gap.
    const std::int64_t fr = gs.back();
    for (std::int64_t a = 1; 2 * a <= fr; ++a) {
        if (is_gap.test(static_cast<std::size_t>(a))) continue;
        for (std::int64_t b = a; a + b <= fr; ++b) {
            if (is_gap.test(static_cast<std::size_t>(b))) continue;
            if (is_gap.test(static_cast<std::size_t>(a + b)))
                throw InvalidGapSetError(a, b);
        }
    }

    std::int64_t m = 1;
    while (m < conductor && is_gap.test(static_cast<std::size_t>(m))) ++m;

    NumericalSemigroup s;
    s.conductor_ = conductor;
    s.multiplicity_ = m;
    const std::int64_t w = conductor + m;
    s.membership_ = Bitmap(static_cast<std::size_t>(w));
    for (std::int64_t n = 0; n < w; ++n)
        if (n >= conductor || !is_gap.test(static_cast<std::size_t>(n)))
            s.membership_.set(static_cast<std::size_t>(n));
    s.compute_atoms();
    return s;
}

void NumericalSemigroup::compute_atoms() {
    atoms_.clear();
    if (conductor_ == 0) {
        // S = N; the window [0, 1) cannot see the atom 1.
        atoms_.push_back(1);
        return;
    }
    const std::size_t w = membership_.size();
    Bitmap star = membership_;
    star.clear(0);
    Bitmap sums(w);
    // Ascending scan: an unmarked member of S* is an atom; marking atom + S*
    // covers all of S* + S* within the window.
    for (std::size_t n = star.next_set(1); n < w; n = star.next_set(n + 1)) {
        if (sums.test(n)) continue;
        atoms_.push_back(static_cast<std::int64_t>(n));
        Bitmap::or_shifted(sums, star, n);
    }
    assert(!atoms_.empty() && atoms_.front() == multiplicity_);
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 1; n < conductor_; ++n)
        if (!membership_.test(static_cast<std::size_t>(n))) out.push_back(n);
    return out;
}

NumericalSemigroup NumericalSemigroup::remove_effective_generator(std::int64_t a) const {
    if (!std::binary_search(atoms_.begin(), atoms_.end(), a) || a <= frobenius())
        throw Error(ErrorCode::InvalidArgument,
                    std::to_string(a) + " is not an effective generator of " + to_string());

    NumericalSemigroup child;
    child.conductor_ = checked_add(a, 1);
    if (a == multiplicity_) {
        std::int64_t n = a + 1;
        while (!contains(n)) ++n;
        child.multiplicity_ = n;
    } else {
        child.multiplicity_ = multiplicity_;
    }

    const std::int64_t w = child.conductor_ + child.multiplicity_;
    if (w >= kMaxWindowBits) throw_overflow("child window");
    child.membership_ = Bitmap(static_cast<std::size_t>(w));
    for (std::int64_t n = 0; n < w; ++n)
        if (n != a && contains(n)) child.membership_.set(static_cast<std::size_t>(n));

    // Atoms change incrementally: every old atom except a survives, and the
    // only possible new atoms are a + m' (and 2a when a was the multiplicity).
    child.atoms_.reserve(atoms_.size() + 1);
    for (std::int64_t b : atoms_)
        if (b != a) child.atoms_.push_back(b);

    const std::int64_t mp = child.multiplicity_;
    auto is_sum_in_child = [&](std::int64_t z) {
        for (std::int64_t s = mp; s + mp <= z; ++s)
            if (child.contains(s) && child.contains(z - s)) return true;
        return false;
    };
    auto consider = [&](std::int64_t z) {
        if (z >= w) return;
        if (!is_sum_in_child(z)) {
            child.atoms_.insert(
                std::upper_bound(child.atoms_.begin(), child.atoms_.end(), z), z);
        }
    };
    if (a == multiplicity_) consider(2 * a);
    consider(checked_add(a, mp));

    return child;
}

std::string NumericalSemigroup::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i != 0) out += ",";
        out += std::to_string(atoms_[i]);
    }
    return out + ">";
}

void NumericalSemigroup::check_invariants() const {
    assert(membership_.test(0));
    assert(conductor_ == 0 || conductor_ >= 2);
    assert(static_cast<std::int64_t>(membership_.size()) == conductor_ + multiplicity_);
    for (std::int64_t n = conductor_; n < conductor_ + multiplicity_; ++n)
        assert(membership_.test(static_cast<std::size_t>(n)));
    if (conductor_ > 0) assert(!membership_.test(static_cast<std::size_t>(conductor_ - 1)));
}

} // namespace wilf
