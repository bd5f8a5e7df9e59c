#pragma once

// Sentence embedding contract plus the built-in hashed n-gram embedder.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lwg/random.hpp"
#include "lwg/text.hpp"

namespace lwg {

using Vector = std::vector<double>;

enum class ProviderMode { kBuiltinNgram, kExternalService };

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual std::string name() const = 0;
  virtual std::size_t dimension() const = 0;
  virtual ProviderMode mode() const = 0;

  virtual Vector embed(std::string_view text) = 0;

  virtual std::vector<Vector> embed_batch(std::span<const std::string> texts) {
    std::vector<Vector> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(embed(t));
    return out;
  }
};

inline double dot(std::span<const double> u, std::span<const double> v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

inline double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw std::domain_error("cosine: dimension mismatch");
  const double nu = std::sqrt(dot(u, u));
  const double nv = std::sqrt(dot(v, v));
  if (nu == 0.0 || nv == 0.0) throw std::domain_error("cosine: zero vector");
  return std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
}

// Signed feature hashing of whitespace-token unigrams and adjacent bigrams,
// L2-normalised. Feature keys are "u\x1f<tok>" and "b\x1f<tok1>\x1f<tok2>";
// h = splitmix64(FNV-1a-64(key) ^ hash_seed), bucket = h mod dimension,
// sign = top bit of h (set means -1).
class NgramHashEmbedder final : public EmbeddingProvider {
 public:
  static constexpr std::size_t kDefaultDimension = 4096;
  static constexpr std::uint64_t kDefaultHashSeed = 0x6c77672d656d6264ULL;  // "lwg-embd"

  explicit NgramHashEmbedder(std::size_t dimension = kDefaultDimension,
                             std::uint64_t hash_seed = kDefaultHashSeed)
      : dimension_(dimension), hash_seed_(hash_seed) {
    if (dimension_ < 1) throw std::invalid_argument("embedding dimension must be >= 1");
  }

  std::string name() const override { return "builtin-ngram"; }
  std::size_t dimension() const override { return dimension_; }
  ProviderMode mode() const override { return ProviderMode::kBuiltinNgram; }

  struct Feature {
    std::size_t bucket;
    double sign;
  };

  Feature feature(std::string_view key) const {
    std::uint64_t state = fnv1a64(key) ^ hash_seed_;
    const std::uint64_t h = splitmix64_next(state);
    return {static_cast<std::size_t>(h % dimension_), (h >> 63) ? -1.0 : 1.0};
  }

  static std::vector<std::string> feature_keys(std::string_view text) {
    const auto toks = text::split_whitespace(text);
    std::vector<std::string> keys;
    keys.reserve(2 * toks.size());
    for (const auto& t : toks) keys.push_back("u\x1f" + t);
    for (std::size_t i = 1; i < toks.size(); ++i) {
      keys.push_back("b\x1f" + toks[i - 1] + "\x1f" + toks[i]);
    }
    return keys;
  }

  Vector embed(std::string_view text) override {
    const auto keys = feature_keys(text);
    if (keys.empty()) throw std::domain_error("embed: empty text");
    Vector v(dimension_, 0.0);
    for (const auto& k : keys) {
      const Feature f = feature(k);
      v[f.bucket] += f.sign;
    }
    const double norm = std::sqrt(dot(v, v));
    if (norm == 0.0) throw std::domain_error("embed: hashed features cancelled out");
    for (double& x : v) x /= norm;
    return v;
  }

 private:
  std::size_t dimension_;
  std::uint64_t hash_seed_;
};

}  // namespace lwg
