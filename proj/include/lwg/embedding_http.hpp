#pragma once

// Client for an external embedding service:
//   POST <endpoint>  {"texts": [...]}  ->  {"vectors": [[...], ...]}
// Requests are batched, bounded in flight, and retried (they are idempotent).

#include <chrono>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"
#include "json.hpp"
#include "lwg/corpus_io.hpp"
#include "lwg/embedding.hpp"
#include "lwg/error.hpp"
#include "lwg/parallel.hpp"

namespace lwg {

struct HttpEmbedderConfig {
  std::string endpoint;  // http://host[:port]/path
  std::size_t dimension = 0;
  std::size_t batch_size = 32;
  unsigned max_in_flight = 4;
  int retries = 2;
  std::chrono::milliseconds timeout{30000};
  std::chrono::milliseconds backoff{100};

  // LWG_EMBED_ENDPOINT / LWG_EMBED_DIM; values already set take precedence.
  void apply_environment() {
    if (endpoint.empty()) {
      if (const char* e = std::getenv("LWG_EMBED_ENDPOINT")) endpoint = e;
    }
    if (dimension == 0) {
      if (const char* d = std::getenv("LWG_EMBED_DIM")) {
        int v = 0;
        if (!detail::parse_int(d, v) || v < 1) {
          throw InputError("LWG_EMBED_DIM must be a positive integer");
        }
        dimension = static_cast<std::size_t>(v);
      }
    }
  }
};

class HttpEmbedder final : public EmbeddingProvider {
 public:
  explicit HttpEmbedder(HttpEmbedderConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.dimension < 1) throw InputError("external embedder needs a dimension");
    if (cfg_.batch_size < 1) cfg_.batch_size = 1;
    constexpr std::string_view kScheme = "http://";
    if (!cfg_.endpoint.starts_with(kScheme)) {
      throw InputError("embedding endpoint must be an http:// URL: " + cfg_.endpoint);
    }
    const auto slash = cfg_.endpoint.find('/', kScheme.size());
    if (slash == std::string::npos) {
      host_ = cfg_.endpoint;
      path_ = "/";
    } else {
      host_ = cfg_.endpoint.substr(0, slash);
      path_ = cfg_.endpoint.substr(slash);
    }
  }

  std::string name() const override { return "external:" + cfg_.endpoint; }
  std::size_t dimension() const override { return cfg_.dimension; }
  ProviderMode mode() const override { return ProviderMode::kExternalService; }

  Vector embed(std::string_view text) override {
    std::vector<std::string> one{std::string(text)};
    return std::move(embed_batch(one).front());
  }

  std::vector<Vector> embed_batch(std::span<const std::string> texts) override {
    std::vector<Vector> out(texts.size());
    const std::size_t batches = (texts.size() + cfg_.batch_size - 1) / cfg_.batch_size;
    parallel_for(batches, cfg_.max_in_flight, [&](std::size_t b) {
      const std::size_t begin = b * cfg_.batch_size;
      const std::size_t end = std::min(texts.size(), begin + cfg_.batch_size);
      auto vectors = request(texts.subspan(begin, end - begin));
      for (std::size_t i = 0; i < vectors.size(); ++i) out[begin + i] = std::move(vectors[i]);
    });
    return out;
  }

 private:
  std::vector<Vector> request(std::span<const std::string> texts) const {
    const std::string body =
        nlohmann::json{{"texts", std::vector<std::string>(texts.begin(), texts.end())}}
            .dump();
    std::string last_error;
    for (int attempt = 0; attempt <= cfg_.retries; ++attempt) {
      if (attempt > 0) std::this_thread::sleep_for(cfg_.backoff * (1 << (attempt - 1)));
      httplib::Client client(host_);
      const auto secs = std::chrono::duration_cast<std::chrono::seconds>(cfg_.timeout);
      client.set_connection_timeout(secs.count() > 0 ? secs.count() : 1, 0);
      client.set_read_timeout(secs.count() > 0 ? secs.count() : 1, 0);
      auto res = client.Post(path_, body, "application/json");
      if (!res) {
        last_error = httplib::to_string(res.error());
        continue;
      }
      if (res->status >= 500) {
        last_error = "HTTP " + std::to_string(res->status);
        continue;
      }
      if (res->status != 200) {
        throw ProviderError(cfg_.endpoint + ": HTTP " + std::to_string(res->status));
      }
      return decode(res->body, texts.size());
    }
    throw ProviderError(cfg_.endpoint + ": " + last_error);
  }

  std::vector<Vector> decode(const std::string& body, std::size_t expected) const {
    std::vector<Vector> vectors;
    try {
      nlohmann::json::parse(body).at("vectors").get_to(vectors);
    } catch (const nlohmann::json::exception& e) {
      throw ProviderError(cfg_.endpoint + ": bad response: " + e.what());
    }
    if (vectors.size() != expected) {
      throw ProviderError(cfg_.endpoint + ": expected " + std::to_string(expected) +
                          " vectors, got " + std::to_string(vectors.size()));
    }
    for (const auto& v : vectors) {
      if (v.size() != cfg_.dimension) {
        throw ProviderError(cfg_.endpoint + ": vector dimension " +
                            std::to_string(v.size()) + " != configured " +
                            std::to_string(cfg_.dimension));
      }
    }
    return vectors;
  }

  HttpEmbedderConfig cfg_;
  std::string host_;
  std::string path_;
};

}  // namespace lwg
