#include "ecpkit/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>

#include "ecpkit/error.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace ecpkit::kernels {

std::uint64_t saturating_pow(std::uint64_t q, std::size_t k) noexcept {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (q != 0 && r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        r *= q;
    }
    return r;
}

Vec message_from_index(const FieldSpec& f, std::uint64_t index, std::size_t k) {
    Vec m(k, f.zero());
    for (std::size_t i = k; i-- > 0;) {
        m[i] = Felt{static_cast<std::uint32_t>(index % f.q())};
        index /= f.q();
    }
    return m;
}

namespace {

// Codeword of the message with the given index, restricted to rows
// [first, first + digits).
void codeword_of(const Mat& gen, std::size_t first, std::size_t digits, std::uint64_t index, Vec& out) {
    const FieldSpec& f = gen.field();
    std::fill(out.begin(), out.end(), f.zero());
    for (std::size_t i = digits; i-- > 0;) {
        const Felt c{static_cast<std::uint32_t>(index % f.q())};
        index /= f.q();
        if (c.value == 0) continue;
        const auto row = gen.row(first + i);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(c, row[j]));
    }
}

struct Best {
    std::size_t matches = 0;
    std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t count = 0;
    bool any = false;

    void offer(std::size_t m, std::uint64_t idx, std::uint64_t cnt) {
        if (!any || m > matches) {
            matches = m;
            index = idx;
            count = cnt;
            any = true;
        } else if (m == matches) {
            index = std::min(index, idx);
            count += cnt;
        }
    }
};

// Meet-in-the-middle layout: the low message digits are tabulated once in a
// column-major table, the high digits are walked, and each high block is
// compared against the whole table with a vectorizable match count.
template <class T>
NearestHit scan_impl(const Mat& gen, std::span<const Felt> y) {
    const FieldSpec& f = gen.field();
    const std::size_t k = gen.rows();
    const std::size_t n = gen.cols();
    const std::uint64_t q = f.q();
    const std::size_t lo_digits = (k + 1) / 2;
    const std::size_t hi_digits = k - lo_digits;
    const std::uint64_t lo_count = saturating_pow(q, lo_digits);
    const std::uint64_t hi_count = saturating_pow(q, hi_digits);

    std::vector<T> table(n * lo_count);
    {
        Vec cw(n);
        for (std::uint64_t w = 0; w < lo_count; ++w) {
            codeword_of(gen, hi_digits, lo_digits, w, cw);
            for (std::size_t j = 0; j < n; ++j) table[j * lo_count + w] = static_cast<T>(cw[j].value);
        }
    }

    Best best;
#pragma omp parallel
    {
        Best local;
        std::vector<std::uint8_t> cnt(lo_count);
        Vec u(n);
        std::vector<T> z(n);
#pragma omp for schedule(dynamic, 4) nowait
        for (std::int64_t hs = 0; hs < static_cast<std::int64_t>(hi_count); ++hs) {
            const auto h = static_cast<std::uint64_t>(hs);
            codeword_of(gen, 0, hi_digits, h, u);
            for (std::size_t j = 0; j < n; ++j) z[j] = static_cast<T>(f.sub(y[j], u[j]).value);

            std::fill(cnt.begin(), cnt.end(), std::uint8_t{0});
            for (std::size_t j = 0; j < n; ++j) {
                const T target = z[j];
                const T* col = table.data() + j * lo_count;
                std::uint8_t* c = cnt.data();
                for (std::uint64_t w = 0; w < lo_count; ++w) c[w] += static_cast<std::uint8_t>(col[w] == target);
            }
            std::uint8_t top = 0;
            for (std::uint64_t w = 0; w < lo_count; ++w) top = std::max(top, cnt[w]);
            if (local.any && top < local.matches) continue;
            std::uint64_t first = lo_count;
            std::uint64_t ties = 0;
            for (std::uint64_t w = 0; w < lo_count; ++w) {
                if (cnt[w] == top) {
                    if (first == lo_count) first = w;
                    ++ties;
                }
            }
            local.offer(top, h * lo_count + first, ties);
        }
#pragma omp critical(ecpkit_nearest_merge)
        {
            if (local.any) best.offer(local.matches, local.index, local.count);
        }
    }
    return NearestHit{best.index, n - best.matches, best.count};
}

}  // namespace

NearestHit nearest_scan(const Mat& gen, std::span<const Felt> y) {
    if (y.size() != gen.cols()) throw Error(Errc::LengthMismatch, "received word length differs from code length");
    if (gen.cols() > 255) throw Error(Errc::TooLarge, "scan kernel supports lengths up to 255");
    if (gen.field().q() <= 256) return scan_impl<std::uint8_t>(gen, y);
    return scan_impl<std::uint16_t>(gen, y);
}

NearestHit nearest_scan_serial(const Mat& gen, std::span<const Felt> y) {
    if (y.size() != gen.cols()) throw Error(Errc::LengthMismatch, "received word length differs from code length");
    const FieldSpec& f = gen.field();
    const std::size_t k = gen.rows();
    const std::size_t n = gen.cols();
    const std::uint64_t total = saturating_pow(f.q(), k);
    NearestHit hit{0, n + 1, 0};
    Vec cw(n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        codeword_of(gen, 0, k, idx, cw);
        std::size_t dist = 0;
        for (std::size_t j = 0; j < n; ++j) dist += cw[j] != y[j];
        if (dist < hit.distance) {
            hit = NearestHit{idx, dist, 1};
        } else if (dist == hit.distance) {
            ++hit.count_at_min;
        }
    }
    return hit;
}

std::size_t min_weight(const Mat& gen) {
    const FieldSpec& f = gen.field();
    const std::size_t k = gen.rows();
    std::size_t best = gen.cols() + 1;
    // Every nonzero codeword is a nonzero multiple of one whose leading
    // message digit is 1; scan those with the leading digit at position p.
    for (std::size_t p = 0; p < k; ++p) {
        const Mat tail = gen.select_rows(p + 1, k - p - 1);
        Vec target(gen.cols());
        for (std::size_t j = 0; j < gen.cols(); ++j) target[j] = f.neg(gen(p, j));
        best = std::min(best, nearest_scan(tail, target).distance);
    }
    return best;
}

std::size_t min_weight_serial(const Mat& gen) {
    const FieldSpec& f = gen.field();
    const std::size_t k = gen.rows();
    const std::size_t n = gen.cols();
    const std::uint32_t q = f.q();

    // multiples[(i * q + c) * n + j] = c * gen(i, j)
    Vec multiples(k * q * n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::uint32_t c = 0; c < q; ++c) {
            for (std::size_t j = 0; j < n; ++j) multiples[(i * q + c) * n + j] = f.mul(Felt{c}, gen(i, j));
        }
    }

    std::vector<std::uint32_t> digits(k, 0);
    Vec cw(n, f.zero());
    std::size_t best = n + 1;
    while (true) {
        // Odometer step, last digit fastest.
        std::size_t i = k;
        while (i-- > 0) {
            const std::uint32_t old = digits[i];
            const std::uint32_t next = (old + 1 == q) ? 0 : old + 1;
            digits[i] = next;
            const Felt* a = &multiples[(i * q + old) * n];
            const Felt* b = &multiples[(i * q + next) * n];
            for (std::size_t j = 0; j < n; ++j) cw[j] = f.add(f.sub(cw[j], a[j]), b[j]);
            if (next != 0) break;
        }
        if (i == static_cast<std::size_t>(-1)) break;  // wrapped back to the zero message
        best = std::min(best, vec_weight(cw));
    }
    return best;
}

namespace {

struct Elimination {
    std::vector<Vec> basis;
    std::vector<std::size_t> pivot;
};

// Reduces col against the basis. Returns true if it became zero; otherwise
// appends the normalized remainder.
bool reduce_push(const FieldSpec& f, Elimination& e, Vec col) {
    for (std::size_t b = 0; b < e.basis.size(); ++b) {
        const Felt factor = col[e.pivot[b]];
        if (factor.value == 0) continue;
        const Felt neg = f.neg(factor);
        const Vec& v = e.basis[b];
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (v[i].value != 0) col[i] = f.add(col[i], f.mul(neg, v[i]));
        }
    }
    std::size_t lead = 0;
    while (lead < col.size() && col[lead].value == 0) ++lead;
    if (lead == col.size()) return true;
    const Felt scale = f.inv(col[lead]);
    for (auto& x : col) x = f.mul(x, scale);
    e.basis.push_back(std::move(col));
    e.pivot.push_back(lead);
    return false;
}

void atomic_min(std::atomic<std::size_t>& target, std::size_t value) {
    std::size_t cur = target.load(std::memory_order_relaxed);
    while (value < cur && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
}

void dependent_dfs(const FieldSpec& f, const std::vector<Vec>& cols, std::size_t start, std::size_t depth,
                   Elimination& e, std::atomic<std::size_t>& best) {
    for (std::size_t c = start; c < cols.size(); ++c) {
        if (depth + 1 >= best.load(std::memory_order_relaxed)) return;
        if (reduce_push(f, e, cols[c])) {
            atomic_min(best, depth + 1);
            continue;
        }
        if (depth + 2 < best.load(std::memory_order_relaxed)) dependent_dfs(f, cols, c + 1, depth + 1, e, best);
        e.basis.pop_back();
        e.pivot.pop_back();
    }
}

std::vector<Vec> columns_of(const Mat& h) {
    std::vector<Vec> cols(h.cols(), Vec(h.rows()));
    for (std::size_t r = 0; r < h.rows(); ++r) {
        for (std::size_t c = 0; c < h.cols(); ++c) cols[c][r] = h(r, c);
    }
    return cols;
}

}  // namespace

std::size_t min_dependent_columns(const Mat& h) {
    const FieldSpec& f = h.field();
    const auto cols = columns_of(h);
    const std::size_t n = cols.size();
    std::atomic<std::size_t> best{n + 1};

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t first = 0; first < static_cast<std::int64_t>(n); ++first) {
        Elimination e;
        const auto c0 = static_cast<std::size_t>(first);
        if (reduce_push(f, e, cols[c0])) {
            atomic_min(best, 1);
            continue;
        }
        if (2 < best.load(std::memory_order_relaxed)) dependent_dfs(f, cols, c0 + 1, 1, e, best);
    }
    if (best.load() > n) throw Error(Errc::InvariantViolated, "columns are independent; the code is zero");
    return best.load();
}

std::size_t min_dependent_columns_serial(const Mat& h) {
    const std::size_t n = h.cols();
    for (std::size_t w = 1; w <= n; ++w) {
        std::vector<std::size_t> idx(w);
        for (std::size_t i = 0; i < w; ++i) idx[i] = i;
        while (true) {
            if (rank(h.select_columns(idx)) < w) return w;
            std::size_t i = w;
            while (i-- > 0 && idx[i] == n - w + i) {
            }
            if (i == static_cast<std::size_t>(-1)) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw Error(Errc::InvariantViolated, "columns are independent; the code is zero");
}

namespace {

void sums_from(const FieldSpec& f, std::span<const Felt> alpha, std::size_t start, std::size_t remaining, Felt acc,
               std::vector<std::uint8_t>& hit) {
    if (remaining == 0) {
        hit[acc.value] = 1;
        return;
    }
    for (std::size_t i = start; i + remaining <= alpha.size(); ++i) {
        sums_from(f, alpha, i + 1, remaining - 1, f.add(acc, alpha[i]), hit);
    }
}

}  // namespace

std::vector<bool> subset_sums(const FieldSpec& f, std::span<const Felt> alpha, std::size_t k) {
    const std::size_t n = alpha.size();
    std::vector<std::uint8_t> merged(f.q(), 0);
    if (k == 0) {
        merged[0] = 1;
    } else {
#pragma omp parallel
        {
            std::vector<std::uint8_t> local(f.q(), 0);
#pragma omp for schedule(dynamic, 1) nowait
            for (std::int64_t first = 0; first < static_cast<std::int64_t>(n); ++first) {
                const auto i = static_cast<std::size_t>(first);
                if (i + k > n) continue;
                sums_from(f, alpha, i + 1, k - 1, alpha[i], local);
            }
#pragma omp critical(ecpkit_subset_merge)
            for (std::size_t v = 0; v < local.size(); ++v) merged[v] |= local[v];
        }
    }
    return std::vector<bool>(merged.begin(), merged.end());
}

std::vector<bool> subset_sums_serial(const FieldSpec& f, std::span<const Felt> alpha, std::size_t k) {
    std::set<std::uint32_t> sums;
    const std::size_t n = alpha.size();
    if (k <= n) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            Felt s = f.zero();
            for (auto i : idx) s = f.add(s, alpha[i]);
            sums.insert(s.value);
            std::size_t i = k;
            while (i-- > 0 && idx[i] == n - k + i) {
            }
            if (i == static_cast<std::size_t>(-1)) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::vector<bool> out(f.q(), false);
    for (auto v : sums) out[v] = true;
    return out;
}

std::vector<bool> subset_sums_dp(const FieldSpec& f, std::span<const Felt> alpha, std::size_t k) {
    const std::uint32_t q = f.q();
    // reach[j][s]: some j of the entries seen so far sum to s.
    std::vector<std::vector<std::uint8_t>> reach(k + 1, std::vector<std::uint8_t>(q, 0));
    reach[0][0] = 1;
    std::size_t seen = 0;
    for (Felt a : alpha) {
        ++seen;
        for (std::size_t j = std::min(k, seen); j >= 1; --j) {
            const auto& prev = reach[j - 1];
            auto& cur = reach[j];
            for (std::uint32_t s = 0; s < q; ++s) {
                if (prev[s]) cur[f.add(Felt{s}, a).value] = 1;
            }
        }
    }
    return std::vector<bool>(reach[k].begin(), reach[k].end());
}

}  // namespace ecpkit::kernels
