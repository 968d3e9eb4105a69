#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sadkit/types.hpp"

namespace sadkit {

// Read a RIFF/PCM WAV file (8/16/32-bit integer or 32-bit float).
// Multi-channel files contribute channel 0 only; a note is appended to
// `warnings` when given. Samples are normalized to [-1, 1].
// Throws FormatError / UnsupportedError.
AudioClip read_wav(const std::string& path,
                   std::vector<std::string>* warnings = nullptr);

// Write mono 16-bit PCM.
void write_wav(const AudioClip& clip, const std::string& path);

// Label text format: one "onset offset CLASS" triple per line, seconds as
// decimals, CLASS in {speech, nonspeech}. Lines are sorted on read and the
// track validated. Throws ParseError / ValidationError.
LabelTrack read_labels(const std::string& path);
LabelTrack parse_labels(std::string_view text);
void write_labels(const LabelTrack& track, const std::string& path);
std::string format_labels(const LabelTrack& track);

// Frame t is speech iff its center t*shift + shift/2 lies inside a speech
// segment.
DecisionStream labels_to_frames(const LabelTrack& track, double frame_shift,
                                std::size_t n_frames);

// Merge adjacent equal frames back into segments. Only speech segments are
// emitted; frame t covers [t*shift, (t+1)*shift).
LabelTrack frames_to_labels(const DecisionStream& stream);

}  // namespace sadkit
