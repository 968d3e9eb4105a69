#include "sadkit/audio_io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "sadkit/errors.hpp"

namespace sadkit {

namespace {

std::uint32_t read_u32(const std::uint8_t* p) {
  return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 |
         std::uint32_t(p[2]) << 16 | std::uint32_t(p[3]) << 24;
}

std::uint16_t read_u16(const std::uint8_t* p) {
  return std::uint16_t(p[0] | p[1] << 8);
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;

std::string format_seconds(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

AudioClip read_wav(const std::string& path,
                   std::vector<std::string>* warnings) {
  const std::vector<std::uint8_t> bytes = read_file(path);
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw FormatError(path + ": not a RIFF/WAVE file");

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t sample_rate = 0;
  bool have_fmt = false;
  const std::uint8_t* data = nullptr;
  std::uint32_t data_size = 0;
  bool have_data = false;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const char* id = reinterpret_cast<const char*>(bytes.data() + pos);
    const std::uint32_t size = read_u32(bytes.data() + pos + 4);
    pos += 8;
    if (pos + size > bytes.size())
      throw FormatError(path + ": truncated chunk");
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (size < 16) throw FormatError(path + ": fmt chunk too small");
      format = read_u16(bytes.data() + pos);
      channels = read_u16(bytes.data() + pos + 2);
      sample_rate = read_u32(bytes.data() + pos + 4);
      bits = read_u16(bytes.data() + pos + 14);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      data = bytes.data() + pos;
      data_size = size;
      have_data = true;
    }
    pos += size + (size & 1);  // chunks are word-aligned
  }
  if (!have_fmt) throw FormatError(path + ": missing fmt chunk");
  if (!have_data) throw FormatError(path + ": missing data chunk");
  if (channels == 0) throw FormatError(path + ": zero channels");
  if (sample_rate == 0) throw FormatError(path + ": zero sample rate");
  if (data_size == 0) throw FormatError(path + ": empty data chunk");

  if (format != kFormatPcm && format != kFormatFloat)
    throw UnsupportedError(path + ": unsupported format tag " +
                           std::to_string(format));
  if (format == kFormatPcm && bits != 8 && bits != 16 && bits != 32)
    throw UnsupportedError(path + ": unsupported PCM depth " +
                           std::to_string(bits));
  if (format == kFormatFloat && bits != 32)
    throw UnsupportedError(path + ": unsupported float depth " +
                           std::to_string(bits));

  const std::size_t bytes_per_sample = bits / 8;
  const std::size_t block = bytes_per_sample * channels;
  if (data_size % block != 0)
    throw FormatError(path + ": data size is not a whole number of frames");
  const std::size_t num_frames = data_size / block;

  if (channels > 1 && warnings)
    warnings->push_back(path + ": " + std::to_string(channels) +
                        " channels, using channel 0");

  AudioClip clip;
  clip.sample_rate = int(sample_rate);
  clip.samples.resize(num_frames);
  for (std::size_t i = 0; i < num_frames; ++i) {
    const std::uint8_t* p = data + i * block;  // channel 0
    double v = 0.0;
    if (format == kFormatFloat) {
      float f;
      std::memcpy(&f, p, 4);
      v = std::clamp(double(f), -1.0, 1.0);
    } else if (bits == 8) {
      v = (double(*p) - 128.0) / 128.0;  // 8-bit WAV is unsigned
    } else if (bits == 16) {
      v = double(std::int16_t(read_u16(p))) / 32768.0;
    } else {
      v = double(std::int32_t(read_u32(p))) / 2147483648.0;
    }
    clip.samples[i] = v;
  }
  return clip;
}

void write_wav(const AudioClip& clip, const std::string& path) {
  if (clip.sample_rate <= 0) throw Error("write_wav: invalid sample rate");
  if (clip.samples.empty()) throw Error("write_wav: empty clip");

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");

  auto put_u32 = [&out](std::uint32_t v) {
    const std::uint8_t b[4] = {std::uint8_t(v), std::uint8_t(v >> 8),
                               std::uint8_t(v >> 16), std::uint8_t(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
  };
  auto put_u16 = [&out](std::uint16_t v) {
    const std::uint8_t b[2] = {std::uint8_t(v), std::uint8_t(v >> 8)};
    out.write(reinterpret_cast<const char*>(b), 2);
  };

  const std::uint32_t data_size = std::uint32_t(clip.samples.size() * 2);
  out.write("RIFF", 4);
  put_u32(36 + data_size);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  put_u32(16);
  put_u16(kFormatPcm);
  put_u16(1);  // mono
  put_u32(std::uint32_t(clip.sample_rate));
  put_u32(std::uint32_t(clip.sample_rate) * 2);
  put_u16(2);   // block align
  put_u16(16);  // bits
  out.write("data", 4);
  put_u32(data_size);
  for (double v : clip.samples) {
    const double clamped = std::clamp(v, -1.0, 1.0);
    put_u16(std::uint16_t(std::int16_t(std::lround(clamped * 32767.0))));
  }
  if (!out) throw Error("failed writing " + path);
}

LabelTrack parse_labels(std::string_view text) {
  LabelTrack track;
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    std::istringstream iss(line);
    std::string onset_tok, offset_tok, class_tok, extra;
    if (!(iss >> onset_tok)) continue;  // blank line
    if (!(iss >> offset_tok >> class_tok) || (iss >> extra))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'onset offset CLASS'");

    auto parse_double = [&line_no](const std::string& tok) {
      double v = 0.0;
      const auto [ptr, ec] =
          std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(line_no) +
                         ": non-numeric field '" + tok + "'");
      return v;
    };
    Segment seg;
    seg.onset = parse_double(onset_tok);
    seg.offset = parse_double(offset_tok);
    std::transform(class_tok.begin(), class_tok.end(), class_tok.begin(),
                   [](unsigned char ch) { return char(std::tolower(ch)); });
    if (class_tok == "speech")
      seg.label = LabelClass::speech;
    else if (class_tok == "nonspeech")
      seg.label = LabelClass::nonspeech;
    else
      throw ParseError("line " + std::to_string(line_no) +
                       ": unknown class '" + class_tok + "'");
    track.segments.push_back(seg);
  }

  std::stable_sort(track.segments.begin(), track.segments.end(),
                   [](const Segment& a, const Segment& b) {
                     return a.onset < b.onset;
                   });
  validate(track);
  return track;
}

LabelTrack read_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_labels(buf.str());
}

std::string format_labels(const LabelTrack& track) {
  std::string out;
  for (const Segment& s : track.segments) {
    out += format_seconds(s.onset);
    out += ' ';
    out += format_seconds(s.offset);
    out += ' ';
    out += s.label == LabelClass::speech ? "speech" : "nonspeech";
    out += '\n';
  }
  return out;
}

void write_labels(const LabelTrack& track, const std::string& path) {
  validate(track);
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << format_labels(track);
  if (!out) throw Error("failed writing " + path);
}

DecisionStream labels_to_frames(const LabelTrack& track, double frame_shift,
                                std::size_t n_frames) {
  if (frame_shift <= 0.0)
    throw Error("labels_to_frames: frame shift must be positive");
  DecisionStream stream;
  stream.frame_shift = frame_shift;
  stream.speech.assign(n_frames, 0);
  std::size_t seg = 0;
  for (std::size_t t = 0; t < n_frames; ++t) {
    const double center = (double(t) + 0.5) * frame_shift;
    while (seg < track.segments.size() && track.segments[seg].offset <= center)
      ++seg;
    if (seg < track.segments.size() &&
        track.segments[seg].label == LabelClass::speech &&
        center >= track.segments[seg].onset)
      stream.speech[t] = 1;
  }
  return stream;
}

LabelTrack frames_to_labels(const DecisionStream& stream) {
  LabelTrack track;
  const std::size_t T = stream.size();
  std::size_t t = 0;
  while (t < T) {
    if (!stream.speech[t]) {
      ++t;
      continue;
    }
    std::size_t end = t;
    while (end < T && stream.speech[end]) ++end;
    track.segments.push_back({double(t) * stream.frame_shift,
                              double(end) * stream.frame_shift,
                              LabelClass::speech});
    t = end;
  }
  return track;
}

}  // namespace sadkit
