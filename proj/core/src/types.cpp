#include "sadkit/types.hpp"

#include <string>

#include "sadkit/errors.hpp"

namespace sadkit {

void validate(const LabelTrack& track) {
  for (std::size_t i = 0; i < track.segments.size(); ++i) {
    const Segment& s = track.segments[i];
    if (!(s.onset < s.offset))
      throw ValidationError("segment " + std::to_string(i) +
                            ": onset must precede offset");
    if (i > 0 && s.onset < track.segments[i - 1].offset)
      throw ValidationError("segment " + std::to_string(i) +
                            " overlaps its predecessor");
  }
}

}  // namespace sadkit
