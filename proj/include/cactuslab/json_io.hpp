#pragma once

#include <stdexcept>
#include <string>

#include "cactuslab/cacti.hpp"
#include "cactuslab/discs.hpp"
#include "cactuslab/loops.hpp"
#include "cactuslab/segments.hpp"

namespace cactuslab {

// the text could not be read as the schema at all: malformed json,
// missing or mistyped fields, unreadable rationals.  Geometric
// rejections (overlapping discs, broken cactus conditions) stay plain
// invalid_argument so callers can tell the two apart.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/* One door for every file format.  Serializers emit a fixed field order
 * and canonical "p/q" rationals, so equal values produce identical
 * bytes.  Parsers throw std::invalid_argument with a short reason; in
 * strict mode (the default) rationals must already be in lowest terms
 * and derived fields must agree with the geometry. */

std::string disc_config_json(const FramedDiscConfig& a);
FramedDiscConfig parse_disc_config(const std::string& text, bool strict = true);

std::string cactus_json(const Cactus& c);
Cactus parse_cactus(const std::string& text, bool strict = true);

std::string segment_config_json(const SegmentConfig& cfg);
SegmentConfig parse_segment_config(const std::string& text, bool strict = true);

// one channel for the circle group, three for the matrix group; the
// channel count is the caller's business
std::string loops_json(const LoopChannels& g);
LoopChannels parse_loops(const std::string& text, bool strict = true);

}  // namespace cactuslab
