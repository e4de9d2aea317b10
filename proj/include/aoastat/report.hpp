#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "aoastat/stats_core.hpp"
#include "aoastat/types.hpp"

namespace aoastat {

// Keys keep insertion order so repeated runs serialize byte-identically.
using Json = nlohmann::ordered_json;

/// Shortest-stable formatting used for every exported number:
/// 9 significant digits, round-trip safe at that precision.
std::string format_sig9(Scalar v);

/// FNV-1a 64-bit over a byte string, hex-encoded.
std::string fnv1a64_hex(const std::string& bytes);

/// Read a whole file; throws DataError when unreadable.
std::string read_file(const std::string& path);

/// Create parent directories and write content in one shot.
void write_file(const std::string& path, const std::string& content);

/// Histogram CSV: '#' metadata lines, then bin_left,bin_center,bin_right,density.
std::string histogram_csv(const Histogram& hist,
                          const std::vector<std::pair<std::string, std::string>>& metadata);

/// Rows of a moments table (Type / Skewness / Kurtosis / sigma layout).
struct MomentRow {
    std::string type;   ///< e.g. "tsr7", "rpm10"
    std::string series; ///< e.g. "speed", "direction", "aoa_a"
    Scalar tau{0};
    Scalar sigma{0};
    Scalar nu{0};
    Scalar gamma{0};
    Index n{0};
};

std::string moments_csv(const std::vector<MomentRow>& rows);
Json moments_json(const std::vector<MomentRow>& rows);

/// Collects written artifacts and serializes the run manifest:
/// config echo, input hash, artifact list, software version.
class Manifest {
public:
    Manifest(std::string command, Json config_echo);

    void set_input(const std::string& label, const std::string& content_hash);
    /// Write content to out_dir/name and record its hash.
    void add_artifact(const std::string& out_dir, const std::string& name,
                      const std::string& content);
    /// Serialize and write out_dir/manifest.json.
    void write(const std::string& out_dir);

private:
    Json root_;
    Json artifacts_ = Json::array();
};

}  // namespace aoastat
