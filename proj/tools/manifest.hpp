#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace somix::io {

struct OutputDigest {
  std::string path;
  std::string sha256;  // lowercase hex
  std::uintmax_t bytes = 0;
};

// Everything needed to regenerate a run's output files: `argv` replays the
// run exactly (a drawn seed is substituted for --nondeterministic).
struct RunManifest {
  std::string subcommand;
  std::vector<std::string> argv;
  nlohmann::json parameters = nlohmann::json::object();
  std::string version;
  std::optional<std::uint64_t> seed;
  std::string started_at;
  std::string finished_at;
  std::vector<OutputDigest> outputs;

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& doc);
};

std::string sha256_file(const std::string& path);
std::string utc_timestamp();

// `<primary>.manifest.json`
std::string manifest_path(const std::string& primary_output);

}  // namespace somix::io
