/*
   Copyright 2026 The mtcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "mtcodes/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <sstream>
#include <thread>

#include "mtcodes/error.hpp"

namespace mtcodes {

namespace {

using Histogram = std::vector<std::uint64_t>;

// Number of leading message symbols fixed per task so that the work splits
// into at least 8 tasks per worker (or into single messages).
std::size_t prefix_length(std::size_t k, std::uint32_t q, unsigned jobs) {
  if (jobs <= 1) return 0;
  std::size_t p = 0;
  std::uint64_t tasks = 1;
  while (p < k && tasks < std::uint64_t{8} * jobs) {
    tasks *= q;
    ++p;
  }
  return p;
}

template <typename Task>
Histogram run_tasks(std::uint64_t task_count, unsigned jobs, int n, Task task) {
  std::atomic<std::uint64_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(task_count, 1u << 16))));
  std::vector<Histogram> hists(workers, Histogram(static_cast<std::size_t>(n) + 1, 0));
  auto worker = [&](unsigned id) {
    for (std::uint64_t t = next++; t < task_count; t = next++) task(t, hists[id]);
  };
  if (workers == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();
  }
  Histogram out(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& h : hists)
    for (std::size_t w = 0; w < out.size(); ++w) out[w] += h[w];
  return out;
}

Histogram binary_histogram(const FMatrix& g, const EnumOptions& opts) {
  const std::size_t k = g.rows();
  const int n = static_cast<int>(g.cols());
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::uint64_t> rows(k * words, 0);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (g(r, c).code != 0) rows[r * words + c / 64] |= std::uint64_t{1} << (c % 64);

  const std::size_t p = prefix_length(k, 2, opts.jobs);
  const std::size_t free_rows = k - p;
  auto task = [&](std::uint64_t t, Histogram& hist) {
    std::vector<std::uint64_t> cw(words, 0);
    for (std::size_t b = 0; b < p; ++b) {
      if ((t >> b) & 1u) {
        const std::size_t r = free_rows + b;
        for (std::size_t w = 0; w < words; ++w) cw[w] ^= rows[r * words + w];
      }
    }
    auto weight = [&] {
      int s = 0;
      for (std::size_t w = 0; w < words; ++w) s += std::popcount(cw[w]);
      return s;
    };
    ++hist[static_cast<std::size_t>(weight())];
    const std::uint64_t count = std::uint64_t{1} << free_rows;
    if (words == 1) {
      std::uint64_t x = cw[0];
      for (std::uint64_t i = 1; i < count; ++i) {
        x ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
        ++hist[static_cast<std::size_t>(std::popcount(x))];
      }
      return;
    }
    for (std::uint64_t i = 1; i < count; ++i) {
      const std::size_t r = static_cast<std::size_t>(std::countr_zero(i));
      for (std::size_t w = 0; w < words; ++w) cw[w] ^= rows[r * words + w];
      ++hist[static_cast<std::size_t>(weight())];
    }
  };
  return run_tasks(std::uint64_t{1} << p, opts.jobs, n, task);
}

Histogram general_histogram(const FMatrix& g, const EnumOptions& opts) {
  const Field& f = *g.field();
  const std::uint32_t q = f.q();
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  // delta[(r*q + a)*n + c]: change of coordinate c when symbol r steps from a to a+1 (mod q).
  std::vector<Felt> scaled(k * q * n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::size_t c = 0; c < n; ++c) scaled[(r * q + a) * n + c] = f.mul(Felt{a}, g(r, c));
  std::vector<Felt> delta(k * q * n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::size_t c = 0; c < n; ++c)
        delta[(r * q + a) * n + c] = f.sub(scaled[(r * q + (a + 1) % q) * n + c], scaled[(r * q + a) * n + c]);

  const std::size_t p = prefix_length(k, q, opts.jobs);
  const std::size_t free_rows = k - p;
  std::uint64_t tasks = 1;
  for (std::size_t i = 0; i < p; ++i) tasks *= q;

  auto task = [&](std::uint64_t t, Histogram& hist) {
    std::vector<Felt> cw(n);
    for (std::size_t b = 0; b < p; ++b) {
      const auto a = static_cast<std::uint32_t>(t % q);
      t /= q;
      const std::size_t r = free_rows + b;
      for (std::size_t c = 0; c < n; ++c) cw[c] = f.add(cw[c], scaled[(r * q + a) * n + c]);
    }
    int weight = 0;
    for (Felt x : cw) weight += x.code != 0;
    std::vector<std::uint32_t> digits(free_rows, 0);
    for (;;) {
      ++hist[static_cast<std::size_t>(weight)];
      std::size_t i = 0;
      for (; i < free_rows; ++i) {
        const std::uint32_t a = digits[i];
        const Felt* d = &delta[(i * q + a) * n];
        for (std::size_t c = 0; c < n; ++c) {
          if (d[c].code == 0) continue;
          const Felt nv = f.add(cw[c], d[c]);
          weight += static_cast<int>(nv.code != 0) - static_cast<int>(cw[c].code != 0);
          cw[c] = nv;
        }
        digits[i] = (a + 1) % q;
        if (digits[i] != 0) break;
      }
      if (i == free_rows) break;
    }
  };
  return run_tasks(tasks, opts.jobs, static_cast<int>(n), task);
}

}  // namespace

BigInt WeightEnumerator::total() const {
  BigInt s = 0;
  for (const auto& a : coeffs) s += a;
  return s;
}

int WeightEnumerator::min_nonzero_weight() const {
  for (std::size_t w = 1; w < coeffs.size(); ++w)
    if (coeffs[w] > 0) return static_cast<int>(w);
  return -1;
}

WeightEnumerator weight_distribution(const FMatrix& g, const EnumOptions& opts) {
  const std::uint32_t q = g.field()->q();
  const std::size_t k = g.rows();
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (size > opts.cap / q) {
      fail(ErrorKind::EnumerationCapExceeded,
           std::to_string(q) + "^" + std::to_string(k) + " codewords exceed the cap " + std::to_string(opts.cap));
    }
    size *= q;
  }
  if (size > opts.cap) {
    fail(ErrorKind::EnumerationCapExceeded,
         std::to_string(q) + "^" + std::to_string(k) + " codewords exceed the cap " + std::to_string(opts.cap));
  }
  const int n = static_cast<int>(g.cols());
  Histogram hist;
  if (k == 0) {
    hist.assign(static_cast<std::size_t>(n) + 1, 0);
    hist[0] = 1;
  } else if (q == 2) {
    hist = binary_histogram(g, opts);
  } else {
    hist = general_histogram(g, opts);
  }
  WeightEnumerator w{n, {}};
  for (auto v : hist) w.coeffs.emplace_back(v);
  return w;
}

WeightEnumerator weight_enumerator(const MTCode& c, const EnumOptions& opts) {
  return weight_distribution(expand(c), opts);
}

WeightEnumerator macwilliams(const WeightEnumerator& w, std::uint32_t q, const BigInt& code_size) {
  if (code_size <= 0 || w.total() != code_size) {
    fail(ErrorKind::InvalidArgument, "code size does not match the enumerator total");
  }
  const int n = w.n;
  std::vector<std::vector<BigInt>> binom(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    binom[i].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
  }
  auto choose = [&](int a, int b) -> BigInt { return (b < 0 || b > a) ? BigInt(0) : binom[a][b]; };
  std::vector<BigInt> qpow(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * (q - 1);

  WeightEnumerator out{n, std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0)};
  for (int j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (int wt = 0; wt <= n; ++wt) {
      if (w.coeffs[wt] == 0) continue;
      BigInt kraw = 0;
      for (int s = 0; s <= j; ++s) {
        BigInt term = qpow[j - s] * choose(wt, s) * choose(n - wt, j - s);
        if (s % 2) {
          kraw -= term;
        } else {
          kraw += term;
        }
      }
      acc += w.coeffs[wt] * kraw;
    }
    if (acc % code_size != 0) {
      fail(ErrorKind::NonIntegerResult, "coefficient of weight " + std::to_string(j) + " is not an integer");
    }
    out.coeffs[j] = acc / code_size;
  }
  return out;
}

int min_distance(const MTCode& c, const EnumOptions& opts) {
  if (dimension(c) == 0) fail(ErrorKind::InvalidArgument, "minimum distance of the zero code");
  return weight_enumerator(c, opts).min_nonzero_weight();
}

SingletonReport singleton_check(int n, int k, int d) { return {d <= n - k + 1, d == n - k + 1}; }

std::string format_wenum_line(const WeightEnumerator& w) {
  std::ostringstream os;
  os << "wenum n=" << w.n;
  for (std::size_t i = 0; i < w.coeffs.size(); ++i)
    if (w.coeffs[i] != 0) os << ' ' << i << ':' << w.coeffs[i];
  return os.str();
}

std::string format_wenum_poly(const WeightEnumerator& w) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < w.coeffs.size(); ++i) {
    if (w.coeffs[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << w.coeffs[i];
    if (i > 0) os << " y^" << i;
  }
  if (first) os << '0';
  return os.str();
}

WeightEnumerator parse_wenum_line(const std::string& line) {
  std::istringstream is(line);
  std::string tok;
  if (!(is >> tok) || tok != "wenum") fail(ErrorKind::ParseError, "expected 'wenum'");
  if (!(is >> tok) || tok.rfind("n=", 0) != 0) fail(ErrorKind::ParseError, "expected 'n=<length>'");
  WeightEnumerator w;
  try {
    w.n = std::stoi(tok.substr(2));
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "bad length '" + tok + "'");
  }
  if (w.n < 0) fail(ErrorKind::ParseError, "negative length");
  w.coeffs.assign(static_cast<std::size_t>(w.n) + 1, 0);
  while (is >> tok) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) fail(ErrorKind::ParseError, "bad term '" + tok + "'");
    int wt = -1;
    try {
      wt = std::stoi(tok.substr(0, colon));
      w.coeffs.at(static_cast<std::size_t>(wt)) = BigInt(tok.substr(colon + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "bad term '" + tok + "'");
    }
  }
  return w;
}

}  // namespace mtcodes
