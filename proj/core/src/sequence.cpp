#include "laakso/sequence.hpp"

#include <cmath>
#include <sstream>

#include "laakso/errors.hpp"

namespace laakso {

JSequence::JSequence(std::vector<int> entries, int period) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw ValidationError("defining sequence must have at least one entry");
  }
  if (period != static_cast<int>(entries_.size())) {
    throw ValidationError("period " + std::to_string(period) + " does not match " +
                          std::to_string(entries_.size()) + " supplied entries");
  }
  period_product_ = 1;
  double log_sum = 0.0;
  for (int e : entries_) {
    if (e < 2) {
      throw ValidationError("every j_i must be >= 2 (got " + std::to_string(e) + ")");
    }
    period_product_ *= e;
    log_sum += std::log(static_cast<double>(e));
  }
  r_ = std::exp(log_sum / static_cast<double>(entries_.size()));
}

int JSequence::j(int i) const {
  if (i < 1) {
    throw ValidationError("sequence index must be >= 1");
  }
  return entries_[static_cast<std::size_t>((i - 1) % period())];
}

bool JSequence::is_constant() const noexcept {
  for (int e : entries_) {
    if (e != entries_.front()) return false;
  }
  return true;
}

BigInt JSequence::d(int n) const {
  if (n < 0) {
    throw ValidationError("level must be >= 0");
  }
  BigInt out = 1;
  for (int i = 1; i <= n; ++i) out *= j(i);
  return out;
}

std::string JSequence::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  return os.str();
}

JSequence make_sequence(std::vector<int> entries, int period) {
  return JSequence(std::move(entries), period);
}

JSequence parse_sequence(const std::string& text) {
  std::vector<int> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ValidationError("cannot parse sequence entry '" + item + "'");
    }
    if (used != item.size()) {
      throw ValidationError("cannot parse sequence entry '" + item + "'");
    }
    entries.push_back(value);
  }
  const int period = static_cast<int>(entries.size());
  return JSequence(std::move(entries), period);
}

std::int64_t checked_d(const JSequence& seq, int n) {
  if (n < 0) {
    throw ValidationError("level must be >= 0");
  }
  std::int64_t d = 1;
  for (int i = 1; i <= n; ++i) {
    if (__builtin_mul_overflow(d, static_cast<std::int64_t>(seq.j(i)), &d)) {
      throw OverflowError("d_" + std::to_string(n) + " overflows 64-bit integers");
    }
  }
  return d;
}

LevelData level_data(const JSequence& seq, int n, std::int64_t max_points) {
  LevelData out;
  out.n = n;
  out.d = checked_d(seq, n);
  if (out.d - 1 > max_points) {
    throw ResourceError("L_" + std::to_string(n) + " has " + std::to_string(out.d - 1) +
                        " points, above the limit of " + std::to_string(max_points));
  }
  const std::int64_t prev = n == 0 ? 1 : checked_d(seq, n - 1);
  const std::int64_t step = n == 0 ? 1 : out.d / prev;
  out.wormholes.reserve(static_cast<std::size_t>(out.d > 0 ? out.d - 1 : 0));
  for (std::int64_t m = 1; m < out.d; ++m) {
    Rational x(m, out.d);
    out.wormholes.push_back(x);
    if (m % step != 0) out.new_wormholes.push_back(x);
  }
  return out;
}

int wormhole_level(const JSequence& seq, const Rational& x, int max_level) {
  if (x <= 0 || x >= 1) return -1;
  BigInt d = 1;
  for (int i = 1; i <= max_level; ++i) {
    d *= seq.j(i);
    if (d % denominator(x) == 0) return i;
  }
  return -1;
}

Dimensions dimensions(const JSequence& seq) {
  Dimensions out;
  out.hausdorff = 1.0 + std::log(seq.r()) / std::log(2.0);
  out.spectral = out.hausdorff;
  out.walk = 2.0;
  return out;
}

}  // namespace laakso
