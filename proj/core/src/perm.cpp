#include "blocksort/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "blocksort/rng.hpp"

namespace blocksort {

namespace {

void validate_image(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : image) {
    if (v < 1 || v > n)
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    if (seen[static_cast<size_t>(v) - 1])
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " appears twice; not a bijection");
    seen[static_cast<size_t>(v) - 1] = 1;
  }
}

// Builds the image of the cycle (1 tail[0] tail[1] ...).
Permutation cycle_from_tail(int n, const std::vector<int>& tail) {
  std::vector<int> image(static_cast<size_t>(n));
  int prev = 1;
  for (int v : tail) {
    image[static_cast<size_t>(prev) - 1] = v;
    prev = v;
  }
  image[static_cast<size_t>(prev) - 1] = 1;
  return Permutation(std::move(image));
}

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  validate_image(image_);
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity needs degree >= 1");
  std::vector<int> image(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<size_t>(i)] = i + 1;
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (image_[static_cast<size_t>(i)] != i + 1) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch (" +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()) + ")");
  const int n = p.degree();
  std::vector<int> image(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) image[static_cast<size_t>(i) - 1] = q(p(i));
  return Permutation(std::move(image));
}

Permutation inverse(const Permutation& p) {
  const int n = p.degree();
  std::vector<int> image(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) image[static_cast<size_t>(p(i)) - 1] = i;
  return Permutation(std::move(image));
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  const int n = p.degree();
  CycleDecomposition out;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  // Scanning starts in increasing order, so cycles come out sorted by their
  // minimum element and opened there.
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<size_t>(s) - 1]) continue;
    std::vector<int> cyc;
    int x = s;
    while (!seen[static_cast<size_t>(x) - 1]) {
      seen[static_cast<size_t>(x) - 1] = 1;
      cyc.push_back(x);
      x = p(x);
    }
    out.cycles.push_back(std::move(cyc));
  }
  return out;
}

std::string CycleDecomposition::to_string() const {
  std::ostringstream os;
  for (const auto& cyc : cycles) {
    os << '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ' ';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

int cycle_count(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  int count = 0;
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<size_t>(s) - 1]) continue;
    ++count;
    int x = s;
    while (!seen[static_cast<size_t>(x) - 1]) {
      seen[static_cast<size_t>(x) - 1] = 1;
      x = p(x);
    }
  }
  return count;
}

bool same_cycle(const Permutation& p, int i, int j) {
  const int n = p.degree();
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("same_cycle: element out of range");
  if (i == j) throw std::invalid_argument("same_cycle: elements must differ");
  int x = p(i);
  while (x != i) {
    if (x == j) return true;
    x = p(x);
  }
  return false;
}

Permutation canonical_cycle(int n) {
  if (n < 1) throw std::invalid_argument("canonical_cycle needs n >= 1");
  std::vector<int> image(static_cast<size_t>(n));
  for (int i = 1; i < n; ++i) image[static_cast<size_t>(i) - 1] = i + 1;
  image[static_cast<size_t>(n) - 1] = 1;
  return Permutation(std::move(image));
}

FullCycleEnumerator::FullCycleEnumerator(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("full cycles need degree >= 1");
  tail_.reserve(static_cast<size_t>(n) - 1);
  for (int v = 2; v <= n; ++v) tail_.push_back(v);
}

std::optional<Permutation> FullCycleEnumerator::next() {
  if (done_) return std::nullopt;
  if (!first_ && !std::next_permutation(tail_.begin(), tail_.end())) {
    done_ = true;
    return std::nullopt;
  }
  first_ = false;
  return cycle_from_tail(n_, tail_);
}

namespace detail {
bool next_image_permutation(std::vector<int>& image) {
  return std::next_permutation(image.begin(), image.end());
}
}  // namespace detail

Permutation random_full_cycle(int n, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("random_full_cycle needs n >= 2");
  std::vector<int> tail(static_cast<size_t>(n) - 1);
  for (int v = 2; v <= n; ++v) tail[static_cast<size_t>(v) - 2] = v;
  for (size_t i = tail.size() - 1; i > 0; --i) {
    const size_t j =
        static_cast<size_t>(uniform_below(rng, static_cast<uint64_t>(i) + 1));
    std::swap(tail[i], tail[j]);
  }
  return cycle_from_tail(n, tail);
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_permutation needs n >= 1");
  std::vector<int> image(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<size_t>(i)] = i + 1;
  for (size_t i = image.size() - 1; i > 0; --i) {
    const size_t j =
        static_cast<size_t>(uniform_below(rng, static_cast<uint64_t>(i) + 1));
    std::swap(image[i], image[j]);
  }
  return Permutation(std::move(image));
}

std::uint64_t rank_permutation(const Permutation& p) {
  const int n = p.degree();
  if (n > 20) throw std::invalid_argument("rank only supports degree <= 20");
  const auto& img = p.image();
  std::uint64_t rank = 0;
  std::uint64_t fact = 1;
  for (int t = 2; t <= n; ++t) fact *= static_cast<std::uint64_t>(t - 1);
  // Lehmer code digit at position t, weighted by (n-1-t)!.
  for (int t = 0; t < n; ++t) {
    int smaller_later = 0;
    for (int u = t + 1; u < n; ++u)
      if (img[static_cast<size_t>(u)] < img[static_cast<size_t>(t)])
        ++smaller_later;
    rank += static_cast<std::uint64_t>(smaller_later) * fact;
    if (t < n - 1) fact /= static_cast<std::uint64_t>(n - 1 - t);
  }
  return rank;
}

Permutation unrank_permutation(int n, std::uint64_t rank) {
  if (n < 1 || n > 20)
    throw std::invalid_argument("unrank only supports 1 <= degree <= 20");
  std::uint64_t fact = 1;
  for (int t = 2; t < n; ++t) fact *= static_cast<std::uint64_t>(t);
  std::vector<int> pool(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) pool[static_cast<size_t>(v)] = v + 1;
  std::vector<int> image;
  image.reserve(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) {
    const std::uint64_t d = rank / fact;
    rank %= fact;
    if (d >= pool.size()) throw std::invalid_argument("rank out of range");
    image.push_back(pool[static_cast<size_t>(d)]);
    pool.erase(pool.begin() + static_cast<long>(d));
    if (t < n - 1) fact /= static_cast<std::uint64_t>(n - 1 - t);
  }
  return Permutation(std::move(image));
}

Permutation parse_permutation(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  if (tokens.empty())
    throw std::invalid_argument("empty permutation string");

  const auto all_digits = [](const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };

  std::vector<int> image;
  if (tokens.size() == 1 && tokens[0].size() > 1 && all_digits(tokens[0])) {
    // compact digit form, one value per character
    const std::string& s = tokens[0];
    if (s.size() > 9)
      throw std::invalid_argument(
          "compact form only covers degree <= 9; separate values with spaces");
    for (char c : s) {
      if (c == '0')
        throw std::invalid_argument("value 0 out of range in compact form");
      image.push_back(c - '0');
    }
  } else {
    for (const auto& t : tokens) {
      int v = 0;
      const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
      if (res.ec != std::errc() || res.ptr != t.data() + t.size())
        throw std::invalid_argument("not a permutation value: '" + t + "'");
      image.push_back(v);
    }
  }
  return Permutation(std::move(image));
}

std::string to_one_line_string(const Permutation& p) {
  std::ostringstream os;
  const auto& img = p.image();
  for (size_t i = 0; i < img.size(); ++i) {
    if (i) os << ' ';
    os << img[i];
  }
  return os.str();
}

std::string to_cycle_string(const Permutation& p) {
  return cycle_decomposition(p).to_string();
}

}  // namespace blocksort
