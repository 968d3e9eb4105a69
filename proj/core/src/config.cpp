#include "sadkit/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "sadkit/errors.hpp"

namespace sadkit {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double parse_double_or_throw(std::string_view key, std::string_view value) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw ConfigError(std::string(key) + ": not a number: '" +
                      std::string(value) + "'");
  return v;
}

int parse_int_or_throw(std::string_view key, std::string_view value) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw ConfigError(std::string(key) + ": not an integer: '" +
                      std::string(value) + "'");
  return v;
}

bool parse_bool_or_throw(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  throw ConfigError(std::string(key) + ": not a boolean: '" +
                    std::string(value) + "'");
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

struct Field {
  const char* key;
  std::function<void(PipelineConfig&, std::string_view)> set;
  std::function<std::string(const PipelineConfig&)> get;
};

const std::vector<Field>& fields() {
  auto d = [](double PipelineConfig::* member, const char* key) {
    return Field{
        key,
        [member, key](PipelineConfig& c, std::string_view v) {
          c.*member = parse_double_or_throw(key, v);
        },
        [member](const PipelineConfig& c) { return format_double(c.*member); }};
  };
  auto i = [](int PipelineConfig::* member, const char* key) {
    return Field{key,
                 [member, key](PipelineConfig& c, std::string_view v) {
                   c.*member = parse_int_or_throw(key, v);
                 },
                 [member](const PipelineConfig& c) {
                   return std::to_string(c.*member);
                 }};
  };
  static const std::vector<Field> table = {
      i(&PipelineConfig::fft_size, "fft_size"),
      d(&PipelineConfig::frame_length, "frame_length"),
      d(&PipelineConfig::frame_shift, "frame_shift"),
      i(&PipelineConfig::denoise_passes, "denoise_passes"),
      d(&PipelineConfig::gamma, "gamma"),
      d(&PipelineConfig::g_min, "g_min"),
      d(&PipelineConfig::minstats_window, "minstats_window"),
      d(&PipelineConfig::minstats_smoothing, "minstats_smoothing"),
      d(&PipelineConfig::highpass_cutoff, "highpass_cutoff"),
      d(&PipelineConfig::lpc_frame, "lpc_frame"),
      d(&PipelineConfig::subband_width, "subband_width"),
      d(&PipelineConfig::csbe_window, "csbe_window"),
      d(&PipelineConfig::kappa, "kappa"),
      d(&PipelineConfig::noise_margin, "noise_margin"),
      d(&PipelineConfig::speech_margin, "speech_margin"),
      i(&PipelineConfig::gmm_components, "gmm_components"),
      i(&PipelineConfig::gmm_max_iter, "gmm_max_iter"),
      d(&PipelineConfig::gmm_tol, "gmm_tol"),
      d(&PipelineConfig::hmm_self_loop, "hmm_self_loop"),
      Field{"use_hmm",
            [](PipelineConfig& c, std::string_view v) {
              c.use_hmm = parse_bool_or_throw("use_hmm", v);
            },
            [](const PipelineConfig& c) {
              return std::string(c.use_hmm ? "true" : "false");
            }},
      Field{"smoothing",
            [](PipelineConfig& c, std::string_view v) {
              if (v == "none")
                c.smoothing = SmoothingMode::none;
              else if (v == "median")
                c.smoothing = SmoothingMode::median;
              else if (v == "segment")
                c.smoothing = SmoothingMode::segment;
              else
                throw ConfigError("smoothing: expected none|median|segment");
            },
            [](const PipelineConfig& c) {
              return std::string(to_string(c.smoothing));
            }},
      i(&PipelineConfig::median_window, "median_window"),
      d(&PipelineConfig::segment_length, "segment_length"),
      d(&PipelineConfig::segment_shift, "segment_shift"),
      d(&PipelineConfig::segment_threshold, "segment_threshold"),
  };
  return table;
}

void require(bool ok, const char* message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

const char* to_string(SmoothingMode mode) {
  switch (mode) {
    case SmoothingMode::none: return "none";
    case SmoothingMode::median: return "median";
    case SmoothingMode::segment: return "segment";
  }
  return "none";
}

void validate(const PipelineConfig& c) {
  require(is_power_of_two(c.fft_size) && c.fft_size >= 32 &&
              c.fft_size <= (1 << 16),
          "fft_size: must be a power of two in [32, 65536]");
  require(c.frame_length > 0.0 && c.frame_length <= 10.0,
          "frame_length: must lie in (0, 10] seconds");
  require(c.frame_shift > 0.0 && c.frame_shift <= c.frame_length,
          "frame_shift: must lie in (0, frame_length]");
  require(c.denoise_passes >= 1 && c.denoise_passes <= 20,
          "denoise_passes: must lie in [1, 20]");
  require(c.gamma >= 0.0 && c.gamma <= 1e4, "gamma: must lie in [0, 1e4]");
  require(c.g_min > 0.0 && c.g_min < 1.0, "g_min: must lie in (0, 1)");
  require(c.minstats_window > 0.0 && c.minstats_window <= 60.0,
          "minstats_window: must lie in (0, 60] seconds");
  require(c.minstats_smoothing >= 0.0 && c.minstats_smoothing < 1.0,
          "minstats_smoothing: must lie in [0, 1)");
  require(c.highpass_cutoff > 0.0,
          "highpass_cutoff: must be positive (and below Nyquist at run time)");
  require(c.lpc_frame > 0.0 && c.lpc_frame <= 1.0,
          "lpc_frame: must lie in (0, 1] seconds");
  require(c.subband_width > 0.0, "subband_width: must be positive");
  require(c.csbe_window > 0.0 && c.csbe_window <= 10.0,
          "csbe_window: must lie in (0, 10] seconds");
  require(c.kappa > 0.0, "kappa: must be positive");
  require(c.noise_margin > 0.0 && c.noise_margin < c.speech_margin,
          "margins: need 0 < noise_margin < speech_margin");
  require(c.gmm_components >= 1 && c.gmm_components <= 32,
          "gmm_components: must lie in [1, 32]");
  require(c.gmm_max_iter >= 1, "gmm_max_iter: must be >= 1");
  require(c.gmm_tol > 0.0, "gmm_tol: must be positive");
  require(c.hmm_self_loop > 0.0 && c.hmm_self_loop < 1.0,
          "hmm_self_loop: must lie in (0, 1)");
  require(c.median_window >= 1 && c.median_window % 2 == 1,
          "median_window: must be odd and >= 1");
  require(c.segment_shift > 0.0 && c.segment_shift <= c.segment_length,
          "segments: need 0 < segment_shift <= segment_length");
}

void set_field(PipelineConfig& cfg, std::string_view key,
               std::string_view value) {
  for (const Field& f : fields()) {
    if (key == f.key) {
      f.set(cfg, value);
      return;
    }
  }
  throw ConfigError("unknown configuration key '" + std::string(key) + "'");
}

std::string get_field(const PipelineConfig& cfg, std::string_view key) {
  for (const Field& f : fields())
    if (key == f.key) return f.get(cfg);
  throw ConfigError("unknown configuration key '" + std::string(key) + "'");
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const Field& f : fields()) k.emplace_back(f.key);
    return k;
  }();
  return keys;
}

PipelineConfig parse_config(std::string_view text) {
  PipelineConfig cfg;
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    set_field(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  validate(cfg);
  return cfg;
}

PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_text(const PipelineConfig& cfg) {
  std::string out;
  for (const Field& f : fields()) {
    out += f.key;
    out += " = ";
    out += f.get(cfg);
    out += '\n';
  }
  return out;
}

}  // namespace sadkit
