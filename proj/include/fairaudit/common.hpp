#pragma once

#include <algorithm>
#include <cctype>
#include <cfenv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fairaudit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad or inconsistent configuration (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed or insufficient input data (CLI exit code 4).
class DataError : public Error {
 public:
  using Error::Error;
};

// Backend execution failure (CLI exit code 3 when the failure budget is blown).
class BackendError : public Error {
 public:
  using Error::Error;
};

enum class Gender { Male, Female };
enum class AgeGroup { Young, Old };
enum class Attribute { Gender, AgeGroup };

inline std::string_view to_string(Gender g) {
  return g == Gender::Male ? "male" : "female";
}

inline std::string_view to_string(AgeGroup a) {
  return a == AgeGroup::Young ? "young" : "old";
}

inline std::string_view to_string(Attribute a) {
  return a == Attribute::Gender ? "gender" : "age_group";
}

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

inline Gender parse_gender(std::string_view s) {
  const std::string v = to_lower(s);
  if (v == "male" || v == "m") return Gender::Male;
  if (v == "female" || v == "f") return Gender::Female;
  throw ConfigError("unknown gender value: " + std::string(s));
}

// "adult" is accepted as a synonym for the canonical "old" label.
inline AgeGroup parse_age_group(std::string_view s) {
  const std::string v = to_lower(s);
  if (v == "young") return AgeGroup::Young;
  if (v == "old" || v == "adult") return AgeGroup::Old;
  throw ConfigError("unknown age-group value: " + std::string(s));
}

inline Attribute parse_attribute(std::string_view s) {
  const std::string v = to_lower(s);
  if (v == "gender") return Attribute::Gender;
  if (v == "age_group" || v == "age-group" || v == "age") return Attribute::AgeGroup;
  throw ConfigError("unknown attribute: " + std::string(s));
}

inline std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

inline std::vector<std::string> split(std::string_view s, std::string_view delim) {
  std::vector<std::string> parts;
  if (delim.empty()) {
    parts.emplace_back(s);
    return parts;
  }
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(delim, pos);
    if (next == std::string_view::npos) {
      parts.emplace_back(s.substr(pos));
      return parts;
    }
    parts.emplace_back(s.substr(pos, next - pos));
    pos = next + delim.size();
  }
}

/// Deterministic RNG with bit-portable derived draws.
///
/// std::mt19937_64 output is pinned by the standard, but the standard
/// distributions are not; every bounded draw here is implemented directly so
/// that identical (inputs, seed) produce identical results on any platform.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    // splitmix64; passes through the full 64-bit state deterministically.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, n) via rejection sampling.
  std::size_t uniform_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = next_u64();
    } while (r >= limit);
    return static_cast<std::size_t>(r % span);
  }

  // Uniform double in [0, 1) with 53 bits of precision.
  double uniform_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[uniform_index(i)]);
    }
  }

  /// First `k` positions of a Fisher-Yates shuffle of 0..n-1.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    const std::size_t take = std::min(n, k);
    for (std::size_t i = 0; i < take; ++i) {
      std::swap(idx[i], idx[i + uniform_index(n - i)]);
    }
    idx.resize(take);
    return idx;
  }

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL + (b << 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return DetRng::mix(a, b);
}

inline std::uint64_t hash_string(std::string_view s) {
  // FNV-1a, used only for seed derivation, never for content addressing.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Fixed-point formatting with round-half-even, the rounding used across all
/// report surfaces so csv/markdown/json agree digit for digit.
inline std::string format_fixed(double value, int digits) {
  if (std::isnan(value)) return "nan";
  double scale = 1.0;
  for (int i = 0; i < digits; ++i) scale *= 10.0;
  double scaled = std::nearbyint(value * scale);  // FE_TONEAREST: ties to even
  if (scaled == 0.0) scaled = 0.0;                // normalize -0
  const bool negative = scaled < 0.0;
  std::uint64_t units = static_cast<std::uint64_t>(std::llround(std::fabs(scaled)));
  std::string digits_str = std::to_string(units);
  if (static_cast<int>(digits_str.size()) <= digits) {
    digits_str.insert(0, digits + 1 - digits_str.size(), '0');
  }
  std::string out = negative ? "-" : "";
  out += digits_str.substr(0, digits_str.size() - digits);
  if (digits > 0) {
    out += '.';
    out += digits_str.substr(digits_str.size() - digits);
  }
  return out;
}

}  // namespace fairaudit
