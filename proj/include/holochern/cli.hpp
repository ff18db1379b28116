#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "holochern/bg.hpp"
#include "holochern/cech.hpp"
#include "holochern/chern.hpp"
#include "holochern/report.hpp"

namespace holochern {

// Structural problem in a manifest: unknown reference, wrong shape, bad
// dimensions. Reported with exit status 2, like parse errors.
struct ManifestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Manifest {
  Cover cover;
  // Present when the manifest has a bundle section; always at least level 0.
  std::optional<BundlePathData> bundle;
  // The same transitions and intertwiners as a map to BG.
  std::optional<BGMapData> bg;
  std::optional<EquivariantBundleData> equivariant;
  std::string mode;        // empty when not given
  std::optional<int> max_level;
  int max_word = 0;
};

Manifest parse_manifest(const nlohmann::json& j);
Manifest load_manifest(const std::string& path);

// Coefficient of z^{-1} in the Laurent expansion at z = 0 of the dz
// coefficient of w, z the first coordinate of w's chart; nullopt when w has
// components in other directions.
std::optional<RationalFunction> residue_at_zero(const HoloForm& w);

struct RunOptions {
  std::string mode;  // empty: take it from the manifest
  std::string manifest_path;
  std::optional<int> max_level;
  std::string output_path;
  std::uint64_t seed = 1;
};

struct RunResult {
  std::string mode;
  int exit_code = 0;
  std::vector<CheckReport> checks;
  nlohmann::ordered_json results;  // mode-specific values
  std::string artifact;            // canonical cochain text
  std::string error;               // set when exit_code == 2
  double seconds = 0;
};

std::vector<std::string> run_modes();
// Never throws for manifest or parse problems; they give exit code 2.
RunResult run(const RunOptions& opts);
// Runs on an already parsed manifest (mode and level resolved from opts first).
RunResult run(const RunOptions& opts, const Manifest& m);

std::string text_report(const RunResult& r);
// Key order is fixed; only "timing" depends on the machine.
nlohmann::ordered_json json_report(const RunResult& r);

std::string serialize_table(const Cover& cover, const ChainMapTable& t);

}  // namespace holochern
