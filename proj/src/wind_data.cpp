#include "aoastat/wind_data.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "aoastat/angles.hpp"
#include "aoastat/errors.hpp"
#include "aoastat/report.hpp"

namespace aoastat {

namespace {

constexpr Scalar kTimeTolerance = 1e-9;  // allowed jitter of sample spacing, s
constexpr Scalar kSpeedFloor = 0.1;      // m/s, generator/loader clip level

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_number(const std::string& tok, Scalar& out) {
    const std::string t = trim(tok);
    if (t.empty()) return false;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) return false;
    return std::isfinite(out);
}

char detect_delimiter(const std::string& line) {
    for (char c : {',', ';', '\t'})
        if (line.find(c) != std::string::npos) return c;
    return ' ';
}

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    if (delim == ' ') {  // any whitespace run
        std::istringstream iss(line);
        std::string tok;
        while (iss >> tok) out.push_back(tok);
        return out;
    }
    std::string cur;
    for (char c : line) {
        if (c == delim) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int name_to_field(const std::string& name) {
    const std::string n = lower(trim(name));
    if (n == "t" || n == "time") return 0;
    if (n == "u" || n == "speed") return 1;
    if (n == "phi" || n == "dir" || n == "direction") return 2;
    if (n == "valid") return 3;
    if (n == "ux" || n == "u_x") return 4;
    if (n == "uy" || n == "u_y") return 5;
    return -1;
}

void assign_field(ColumnMap& map, int field, int index) {
    switch (field) {
        case 0: map.t = index; break;
        case 1: map.u = index; break;
        case 2: map.phi = index; break;
        case 3: map.valid = index; break;
        case 4: map.ux = index; break;
        case 5: map.uy = index; break;
        default: break;
    }
}

}  // namespace

ColumnMap parse_column_map(const std::string& text) {
    ColumnMap map;
    for (const std::string& part : split(text, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos)
            throw ConfigError("column map entry '" + part + "' is not name=index");
        const int field = name_to_field(part.substr(0, eq));
        if (field < 0)
            throw ConfigError("unknown column name '" + trim(part.substr(0, eq)) + "'");
        Scalar idx = 0;
        if (!parse_number(part.substr(eq + 1), idx) || idx < 0 ||
            idx != std::floor(idx))
            throw ConfigError("bad column index in '" + part + "'");
        assign_field(map, field, static_cast<int>(idx));
    }
    if (!map.any()) throw ConfigError("column map resolves no data columns");
    return map;
}

WindSeries load_series(const std::string& path, const ColumnMap& user_map,
                       Scalar rate_override) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");

    std::vector<std::string> data_lines;
    Scalar header_rate = 0;
    std::string header_columns;
    std::string meta;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string body = trim(line.substr(1));
            if (body.rfind("rate=", 0) == 0) parse_number(body.substr(5), header_rate);
            else if (body.rfind("columns=", 0) == 0) header_columns = body.substr(8);
            else if (body.rfind("meta:", 0) == 0) meta = trim(body.substr(5));
            continue;
        }
        data_lines.push_back(line);
    }
    if (data_lines.empty()) throw DataError("'" + path + "' contains no data rows");

    ColumnMap map = user_map;
    const char delim = map.delimiter ? map.delimiter : detect_delimiter(data_lines.front());

    // Header row: first line whose tokens are not all numeric.
    std::size_t first_data = 0;
    {
        const auto toks = split(data_lines[0], delim);
        bool all_numeric = true;
        for (const auto& t : toks) {
            Scalar v;
            if (!parse_number(t, v)) { all_numeric = false; break; }
        }
        if (!all_numeric) {
            first_data = 1;
            if (!map.any()) {
                for (std::size_t i = 0; i < toks.size(); ++i) {
                    const int f = name_to_field(toks[i]);
                    if (f >= 0) assign_field(map, f, static_cast<int>(i));
                }
            }
        }
    }
    if (!map.any() && !header_columns.empty()) {
        const auto names = split(header_columns, ',');
        for (std::size_t i = 0; i < names.size(); ++i) {
            const int f = name_to_field(names[i]);
            if (f >= 0) assign_field(map, f, static_cast<int>(i));
        }
    }
    if (!map.any()) {
        // Positional fallback: t,u,phi[,valid] with >= 3 columns, else u,phi.
        const auto n_cols = split(data_lines[first_data], delim).size();
        if (n_cols >= 3) { map.t = 0; map.u = 1; map.phi = 2; if (n_cols >= 4) map.valid = 3; }
        else if (n_cols == 2) { map.u = 0; map.phi = 1; }
        else throw DataError("'" + path + "': cannot resolve columns from a single field");
    }
    const bool components = map.ux >= 0 && map.uy >= 0;
    if (!components && (map.u < 0 || map.phi < 0))
        throw ConfigError("columns must resolve (u, phi) or (ux, uy)");

    const Index n = static_cast<Index>(data_lines.size() - first_data);
    if (n == 0) throw DataError("'" + path + "' contains no data rows");

    WindSeries series;
    series.u = ArrayX::Zero(n);
    series.phi = ArrayX::Zero(n);
    series.valid = BoolArray::Constant(n, true);
    series.meta = meta.empty() ? ("file:" + path) : meta;
    std::vector<Scalar> times;
    if (map.t >= 0) times.reserve(static_cast<std::size_t>(n));

    const int max_needed = std::max({map.t, map.u, map.phi, map.valid, map.ux, map.uy});
    for (Index i = 0; i < n; ++i) {
        const auto toks = split(data_lines[first_data + static_cast<std::size_t>(i)], delim);
        bool ok = static_cast<int>(toks.size()) > max_needed;
        Scalar t = 0, u = 0, phi = 0, vx = 0, vy = 0, flag = 1;
        if (ok && map.t >= 0) ok = parse_number(toks[static_cast<std::size_t>(map.t)], t);
        if (ok && map.valid >= 0) ok = parse_number(toks[static_cast<std::size_t>(map.valid)], flag);
        if (ok) {
            if (components) {
                ok = parse_number(toks[static_cast<std::size_t>(map.ux)], vx) &&
                     parse_number(toks[static_cast<std::size_t>(map.uy)], vy);
                if (ok) {
                    u = std::hypot(vx, vy);
                    // Meteorological coming-from convention: clockwise from
                    // north of the reversed wind vector.
                    phi = u > 0 ? wrap_compass_deg(rad_to_deg(std::atan2(-vx, -vy))) : 0.0;
                }
            } else {
                ok = parse_number(toks[static_cast<std::size_t>(map.u)], u) &&
                     parse_number(toks[static_cast<std::size_t>(map.phi)], phi);
                if (ok && u < 0) ok = false;  // speed is a magnitude
                if (ok) phi = wrap_compass_deg(phi);
            }
        }
        if (map.t >= 0) times.push_back(t);  // keep slot even for malformed rows
        if (!ok || flag == 0) {
            series.valid[i] = false;
            continue;
        }
        series.u[i] = u;
        series.phi[i] = phi;
    }

    // Rate resolution: explicit override, then file header, then time column.
    if (rate_override > 0) {
        series.rate = rate_override;
    } else if (header_rate > 0) {
        series.rate = header_rate;
    } else if (map.t >= 0 && n >= 2) {
        const Scalar span = times.back() - times.front();
        if (!(span > 0)) throw DataError("'" + path + "': time column is not increasing");
        const Scalar dt = span / static_cast<Scalar>(n - 1);
        for (Index i = 1; i < n; ++i) {
            const Scalar step = times[static_cast<std::size_t>(i)] -
                                times[static_cast<std::size_t>(i - 1)];
            if (std::abs(step - dt) > kTimeTolerance)
                throw DataError("'" + path + "': non-uniform timestamps beyond tolerance");
        }
        series.rate = 1.0 / dt;
    } else {
        throw ConfigError("sampling rate unknown: supply --rate, a '# rate=' header, "
                          "or a time column");
    }
    if (!(series.rate > 0)) throw ConfigError("sampling rate must be > 0");
    series.t0 = map.t >= 0 && !times.empty() ? times.front() : 0.0;
    return series;
}

void save_series(const WindSeries& series, const std::string& path) {
    std::string out;
    out.reserve(static_cast<std::size_t>(series.size()) * 32 + 256);
    out += "# aoastat series v1\n";
    if (!series.meta.empty()) out += "# meta: " + series.meta + "\n";
    out += "# rate=" + format_sig9(series.rate) + "\n";
    out += "# n=" + std::to_string(series.size()) + "\n";
    if (series.clipped > 0) out += "# clipped=" + std::to_string(series.clipped) + "\n";
    out += "# columns=t,u,phi,valid\n";
    out += "t,u,phi,valid\n";
    for (Index i = 0; i < series.size(); ++i) {
        out += format_sig9(series.time_at(i));
        out += ',';
        out += format_sig9(series.u[i]);
        out += ',';
        out += format_sig9(series.phi[i]);
        out += ',';
        out += series.valid[i] ? '1' : '0';
        out += '\n';
    }
    write_file(path, out);
}

WindSeries block_average(const WindSeries& series, Scalar target_rate) {
    if (!(target_rate > 0)) throw ConfigError("block_average: target rate must be > 0");
    if (series.size() == 0) throw DataError("block_average: empty series");
    const Scalar ratio = series.rate / target_rate;
    const auto m = static_cast<Index>(std::llround(ratio));
    if (m < 1 || std::abs(ratio - static_cast<Scalar>(m)) > 1e-9)
        throw ConfigError("block_average: source rate must be an integer multiple "
                          "of the target rate");
    if (m == 1) return series;

    const Index n_out = series.size() / m;
    if (n_out == 0) throw DataError("block_average: series shorter than one block");
    WindSeries out;
    out.rate = target_rate;
    out.t0 = series.t0;
    out.meta = series.meta;
    out.u = ArrayX::Zero(n_out);
    out.phi = ArrayX::Zero(n_out);
    out.valid = BoolArray::Constant(n_out, true);
    for (Index b = 0; b < n_out; ++b) {
        Scalar su = 0, ss = 0, sc = 0;
        bool ok = true;
        for (Index j = b * m; j < (b + 1) * m; ++j) {
            if (!series.valid[j]) { ok = false; break; }
            su += series.u[j];
            const Scalar rad = deg_to_rad(series.phi[j]);
            ss += std::sin(rad);
            sc += std::cos(rad);
        }
        if (!ok) {
            out.valid[b] = false;
            continue;
        }
        out.u[b] = su / static_cast<Scalar>(m);
        out.phi[b] = circular_mean_deg(ss, sc);
    }
    return out;
}

WindSeries apply_exclusions(const WindSeries& series, Scalar sector_lo, Scalar sector_hi,
                            Scalar min_speed, bool sector_enabled) {
    if (sector_enabled && (sector_lo < 0 || sector_lo >= 360 || sector_hi < 0 || sector_hi >= 360))
        throw ConfigError("apply_exclusions: sector bounds must lie in [0, 360)");
    WindSeries out = series;
    for (Index i = 0; i < out.size(); ++i) {
        if (!out.valid[i]) continue;
        bool excluded = out.u[i] < min_speed;
        if (!excluded && sector_enabled) {
            const Scalar phi = out.phi[i];
            excluded = sector_lo <= sector_hi
                           ? (phi >= sector_lo && phi <= sector_hi)
                           : (phi >= sector_lo || phi <= sector_hi);  // wraps 360
        }
        if (excluded) out.valid[i] = false;
    }
    return out;
}

AveragedSeries moving_average(const WindSeries& series, Scalar window) {
    if (!(series.rate > 0)) throw ConfigError("moving_average: series rate unset");
    if (window < 1.0 / series.rate - kTimeTolerance)
        throw ConfigError("moving_average: window shorter than one sample period");
    const Index n = series.size();
    const auto m = static_cast<Index>(std::llround(window * series.rate));

    AveragedSeries out;
    out.window = window;
    out.u_bar = ArrayX::Constant(n, std::numeric_limits<Scalar>::quiet_NaN());
    out.phi_bar = ArrayX::Constant(n, std::numeric_limits<Scalar>::quiet_NaN());
    out.valid = BoolArray::Constant(n, false);
    if (n == 0) return out;

    // Prefix sums over valid samples only.
    std::vector<Scalar> cu(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<Scalar> cs(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<Scalar> cc(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<Index> cbad(static_cast<std::size_t>(n) + 1, 0);
    for (Index i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const bool v = series.valid[i];
        const Scalar rad = deg_to_rad(series.phi[i]);
        cu[k + 1] = cu[k] + (v ? series.u[i] : 0.0);
        cs[k + 1] = cs[k] + (v ? std::sin(rad) : 0.0);
        cc[k + 1] = cc[k] + (v ? std::cos(rad) : 0.0);
        cbad[k + 1] = cbad[k] + (v ? 0 : 1);
    }
    for (Index i = m - 1; i < n; ++i) {
        const auto hi = static_cast<std::size_t>(i) + 1;
        const auto lo = static_cast<std::size_t>(i - m + 1);
        const Index bad = cbad[hi] - cbad[lo];
        if (2 * bad > m) continue;  // more than half the window excluded
        const Index good = m - bad;
        if (good == 0) continue;
        out.u_bar[i] = (cu[hi] - cu[lo]) / static_cast<Scalar>(good);
        out.phi_bar[i] = circular_mean_deg(cs[hi] - cs[lo], cc[hi] - cc[lo]);
        out.valid[i] = true;
    }
    return out;
}

SeriesSummary summarize(const WindSeries& series) {
    SeriesSummary s;
    s.n = series.size();
    s.rate = series.rate;
    s.duration = series.duration();
    Scalar su = 0, suu = 0, ss = 0, sc = 0;
    for (Index i = 0; i < series.size(); ++i) {
        if (!series.valid[i]) continue;
        ++s.n_valid;
        su += series.u[i];
        suu += series.u[i] * series.u[i];
        const Scalar rad = deg_to_rad(series.phi[i]);
        ss += std::sin(rad);
        sc += std::cos(rad);
    }
    if (s.n_valid == 0) return s;
    const auto nv = static_cast<Scalar>(s.n_valid);
    s.u_mean = su / nv;
    s.u_sigma = std::sqrt(std::max(0.0, suu / nv - s.u_mean * s.u_mean));
    s.phi_mean = circular_mean_deg(ss, sc);

    // Turbulence intensity from 10-minute blocks when the record allows.
    const auto block = static_cast<Index>(std::llround(600.0 * series.rate));
    std::vector<Scalar> sigmas;
    if (block >= 2 && series.size() >= 2 * block) {
        for (Index b = 0; b + block <= series.size(); b += block) {
            Scalar bs = 0, bss = 0;
            Index bn = 0;
            for (Index j = b; j < b + block; ++j) {
                if (!series.valid[j]) continue;
                bs += series.u[j];
                bss += series.u[j] * series.u[j];
                ++bn;
            }
            if (2 * bn >= block) {
                const Scalar mean = bs / static_cast<Scalar>(bn);
                sigmas.push_back(std::sqrt(std::max(0.0, bss / static_cast<Scalar>(bn) - mean * mean)));
            }
        }
    }
    if (!sigmas.empty() && s.u_mean > 0) {
        Scalar acc = 0;
        for (Scalar v : sigmas) acc += v;
        s.turbulence_intensity = acc / static_cast<Scalar>(sigmas.size()) / s.u_mean;
    } else if (s.u_mean > 0) {
        s.turbulence_intensity = s.u_sigma / s.u_mean;
    }
    return s;
}

}  // namespace aoastat
