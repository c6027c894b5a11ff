#include "grsdual/kernels.hpp"

#include <algorithm>

namespace grsdual::kernels {

uint64_t binomial_capped(uint64_t n, uint64_t k, uint64_t cap) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  __uint128_t r = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<uint64_t>(r);
}

uint64_t pow_capped(uint64_t base, uint64_t e, uint64_t cap) {
  __uint128_t r = 1;
  for (uint64_t i = 0; i < e; ++i) {
    r *= base;
    if (r > cap) return cap + 1;
  }
  return static_cast<uint64_t>(r);
}

std::vector<size_t> sample_subset(size_t n, size_t k, uint64_t seed, uint64_t t) {
  SplitMix64 rng{seed ^ (0xd1342543de82ef95ull * (t + 1))};
  rng.next();
  std::vector<size_t> arr(n);
  for (size_t i = 0; i < n; ++i) arr[i] = i;
  for (size_t i = 0; i < k; ++i) {
    size_t j = i + static_cast<size_t>(rng.bounded(n - i));
    std::swap(arr[i], arr[j]);
  }
  arr.resize(k);
  std::sort(arr.begin(), arr.end());
  return arr;
}

namespace {

constexpr uint32_t kZero = FieldContext::LogView::kZero;

// G in log domain, flat k x n.
std::vector<uint32_t> generator_logs(const Matrix& G) {
  const FieldContext& F = G.field();
  std::vector<uint32_t> logs(G.rows() * G.cols());
  for (size_t i = 0; i < G.rows(); ++i)
    for (size_t j = 0; j < G.cols(); ++j) logs[i * G.cols() + j] = F.log_of_idx(G.at(i, j));
  return logs;
}

bool subset_nonsingular(const uint32_t* Glog, size_t n, size_t k, const size_t* cols,
                        const FieldContext::LogView& lv, uint32_t* buf) {
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) buf[i * k + j] = Glog[i * n + cols[j]];
  return rank_log_inplace(buf, k, k, lv) == k;
}

bool next_combination(std::vector<size_t>& c, size_t n) {
  size_t k = c.size();
  for (size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// t-th k-combination of {0..n-1} in lexicographic order.
std::vector<size_t> unrank_combination(size_t n, size_t k, uint64_t t) {
  std::vector<size_t> out(k);
  size_t x = 0;
  for (size_t i = 0; i < k; ++i) {
    while (true) {
      uint64_t c = binomial_capped(n - x - 1, k - i - 1, UINT64_MAX - 1);
      if (t < c) break;
      t -= c;
      ++x;
    }
    out[i] = x++;
  }
  return out;
}

}  // namespace

MinorScan scan_minors_exhaustive_serial(const Matrix& G) {
  size_t k = G.rows(), n = G.cols();
  auto lv = G.field().log_view();
  auto logs = generator_logs(G);
  std::vector<uint32_t> buf(k * k);
  std::vector<size_t> comb(k);
  for (size_t i = 0; i < k; ++i) comb[i] = i;
  MinorScan res;
  do {
    ++res.tested;
    if (!subset_nonsingular(logs.data(), n, k, comb.data(), lv, buf.data())) {
      ++res.singular;
      if (!res.witness) res.witness = comb;
    }
  } while (next_combination(comb, n));
  return res;
}

MinorScan scan_minors_exhaustive_parallel(const Matrix& G) {
  size_t k = G.rows(), n = G.cols();
  auto lv = G.field().log_view();
  auto logs = generator_logs(G);
  uint64_t total = binomial_capped(n, k, UINT64_MAX - 1);
  MinorScan res;
  res.tested = total;
  uint64_t singular = 0;
  uint64_t first_bad = UINT64_MAX;
#pragma omp parallel reduction(+ : singular) reduction(min : first_bad)
  {
    std::vector<uint32_t> buf(k * k);
#pragma omp for schedule(dynamic, 64)
    for (int64_t t = 0; t < static_cast<int64_t>(total); ++t) {
      auto comb = unrank_combination(n, k, static_cast<uint64_t>(t));
      if (!subset_nonsingular(logs.data(), n, k, comb.data(), lv, buf.data())) {
        ++singular;
        first_bad = std::min(first_bad, static_cast<uint64_t>(t));
      }
    }
  }
  res.singular = singular;
  if (first_bad != UINT64_MAX) res.witness = unrank_combination(n, k, first_bad);
  return res;
}

MinorScan scan_minors_sampled_serial(const Matrix& G, uint64_t samples, uint64_t seed) {
  size_t k = G.rows(), n = G.cols();
  auto lv = G.field().log_view();
  auto logs = generator_logs(G);
  std::vector<uint32_t> buf(k * k);
  MinorScan res;
  res.tested = samples;
  for (uint64_t t = 0; t < samples; ++t) {
    auto comb = sample_subset(n, k, seed, t);
    if (!subset_nonsingular(logs.data(), n, k, comb.data(), lv, buf.data())) {
      ++res.singular;
      if (!res.witness) res.witness = comb;
    }
  }
  return res;
}

MinorScan scan_minors_sampled_parallel(const Matrix& G, uint64_t samples, uint64_t seed) {
  size_t k = G.rows(), n = G.cols();
  auto lv = G.field().log_view();
  auto logs = generator_logs(G);
  MinorScan res;
  res.tested = samples;
  uint64_t singular = 0;
  uint64_t first_bad = UINT64_MAX;
#pragma omp parallel reduction(+ : singular) reduction(min : first_bad)
  {
    std::vector<uint32_t> buf(k * k);
#pragma omp for schedule(dynamic, 16)
    for (int64_t t = 0; t < static_cast<int64_t>(samples); ++t) {
      auto comb = sample_subset(n, k, seed, static_cast<uint64_t>(t));
      if (!subset_nonsingular(logs.data(), n, k, comb.data(), lv, buf.data())) {
        ++singular;
        first_bad = std::min(first_bad, static_cast<uint64_t>(t));
      }
    }
  }
  res.singular = singular;
  if (first_bad != UINT64_MAX) res.witness = sample_subset(n, k, seed, first_bad);
  return res;
}

size_t min_weight_serial(const Matrix& G) {
  const FieldContext& F = G.field();
  size_t k = G.rows(), n = G.cols();
  uint32_t q = F.q();
  std::vector<uint32_t> msg(k, 0);  // element indices
  size_t best = n + 1;
  while (true) {
    // advance odometer
    size_t pos = k;
    for (size_t i = k; i-- > 0;) {
      if (++msg[i] < q) {
        pos = i;
        break;
      }
      msg[i] = 0;
    }
    if (pos == k) break;  // wrapped past the all-zero start
    size_t w = 0;
    for (size_t j = 0; j < n; ++j) {
      uint32_t acc = 0;
      for (size_t i = 0; i < k; ++i) acc = F.add_idx(acc, F.mul_idx(msg[i], G.at(i, j)));
      if (acc) ++w;
    }
    best = std::min(best, w);
  }
  if (best > n) raise(Errc::InternalVerificationFailed, "row space has no nonzero word");
  return best;
}

size_t min_weight_parallel(const Matrix& G) {
  const FieldContext& F = G.field();
  size_t k = G.rows(), n = G.cols();
  uint32_t q = F.q();
  auto lv = F.log_view();

  // scaled[i][e] = log-domain image of row i scaled by the element with
  // enumeration index e (e = 0 is the zero element).
  std::vector<uint32_t> scaled(k * q * n);
  for (size_t i = 0; i < k; ++i)
    for (uint32_t e = 0; e < q; ++e) {
      uint32_t s = F.element_at(e).index();
      uint32_t* dst = scaled.data() + (i * q + e) * n;
      for (size_t j = 0; j < n; ++j) dst[j] = F.log_of_idx(F.mul_idx(s, G.at(i, j)));
    }

  size_t global_best = n + 1;
#pragma omp parallel for schedule(dynamic) reduction(min : global_best)
  for (int64_t e0 = 0; e0 < static_cast<int64_t>(q); ++e0) {
    size_t best = n + 1;
    if (k == 1) {
      if (e0 != 0) {
        const uint32_t* row = scaled.data() + e0 * n;
        size_t w = 0;
        for (size_t j = 0; j < n; ++j)
          if (row[j] != kZero) ++w;
        best = w;
      }
    } else {
      // prefix[i] = sum of scaled rows 0..i for the current digits
      std::vector<uint32_t> prefix(k * n);
      std::vector<uint32_t> digits(k, 0);
      digits[0] = static_cast<uint32_t>(e0);
      std::copy_n(scaled.data() + e0 * n, n, prefix.data());
      auto refresh = [&](size_t from) {
        for (size_t i = std::max<size_t>(from, 1); i < k; ++i) {
          const uint32_t* add_row = scaled.data() + (i * q + digits[i]) * n;
          const uint32_t* prev = prefix.data() + (i - 1) * n;
          uint32_t* cur = prefix.data() + i * n;
          for (size_t j = 0; j < n; ++j) cur[j] = lv.add(prev[j], add_row[j]);
        }
      };
      refresh(1);
      while (true) {
        bool zero_word = e0 == 0;
        if (zero_word)
          for (size_t i = 1; i < k && zero_word; ++i) zero_word = digits[i] == 0;
        if (!zero_word) {
          const uint32_t* last = prefix.data() + (k - 1) * n;
          size_t w = 0;
          for (size_t j = 0; j < n; ++j)
            if (last[j] != kZero) ++w;
          best = std::min(best, w);
        }
        size_t pos = 0;
        for (size_t i = k; i-- > 1;) {
          if (++digits[i] < q) {
            pos = i;
            break;
          }
          digits[i] = 0;
        }
        if (pos == 0) break;
        refresh(pos);
      }
    }
    global_best = std::min(global_best, best);
  }
  if (global_best > n) raise(Errc::InternalVerificationFailed, "row space has no nonzero word");
  return global_best;
}

}  // namespace grsdual::kernels
