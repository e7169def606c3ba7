#include "manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <memory>

#include <openssl/evp.h>

#include "somix/errors.hpp"

namespace somix::io {

nlohmann::json RunManifest::to_json() const {
  nlohmann::json outs = nlohmann::json::array();
  for (const auto& o : outputs) outs.push_back({{"path", o.path}, {"sha256", o.sha256}, {"bytes", o.bytes}});
  return {{"schema", "somix.manifest/1"},
          {"subcommand", subcommand},
          {"argv", argv},
          {"parameters", parameters},
          {"version", version},
          {"seed", seed ? nlohmann::json(std::to_string(*seed)) : nlohmann::json(nullptr)},
          {"started_at", started_at},
          {"finished_at", finished_at},
          {"outputs", outs}};
}

RunManifest RunManifest::from_json(const nlohmann::json& doc) {
  try {
    RunManifest m;
    if (doc.at("schema").get<std::string>() != "somix.manifest/1") throw DomainError("not a run manifest");
    m.subcommand = doc.at("subcommand").get<std::string>();
    m.argv = doc.at("argv").get<std::vector<std::string>>();
    m.parameters = doc.at("parameters");
    m.version = doc.at("version").get<std::string>();
    if (!doc.at("seed").is_null()) m.seed = std::stoull(doc.at("seed").get<std::string>());
    m.started_at = doc.at("started_at").get<std::string>();
    m.finished_at = doc.at("finished_at").get<std::string>();
    for (const auto& o : doc.at("outputs"))
      m.outputs.push_back({o.at("path").get<std::string>(), o.at("sha256").get<std::string>(),
                           o.at("bytes").get<std::uintmax_t>()});
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed manifest: ") + e.what());
  }
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) throw ConsistencyError("sha256 init failed");
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md, &len);
  std::string hex;
  char byte[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(byte, sizeof byte, "%02x", md[i]);
    hex += byte;
  }
  return hex;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t secs = std::chrono::system_clock::to_time_t(now);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[48];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms));
  return out;
}

std::string manifest_path(const std::string& primary_output) { return primary_output + ".manifest.json"; }

}  // namespace somix::io
