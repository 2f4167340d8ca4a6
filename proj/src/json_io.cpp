#include "cactuslab/json_io.hpp"

#include <json.hpp>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cactuslab {

namespace {

using Json = nlohmann::ordered_json;

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("not valid json: ") + e.what());
  }
}

Rat rat_field(const Json& j, bool strict) {
  if (!j.is_string()) throw ParseError("rationals must be p/q strings");
  try {
    return parse_rat(j.get<std::string>(), strict);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::vector<Rat> rat_list(const Json& j, bool strict) {
  if (!j.is_array()) throw ParseError("expected a list of rationals");
  std::vector<Rat> out;
  for (const auto& entry : j) out.push_back(rat_field(entry, strict));
  return out;
}

Json rat_list_json(const std::vector<Rat>& xs) {
  Json out = Json::array();
  for (const Rat& x : xs) out.push_back(rat_str(x));
  return out;
}

RationalComplex complex_field(const Json& j, bool strict) {
  std::vector<Rat> parts = rat_list(j, strict);
  if (parts.size() != 2) throw ParseError("complex numbers are [re, im] pairs");
  return RationalComplex(parts[0], parts[1]);
}

Json complex_json(const RationalComplex& z) {
  return Json::array({rat_str(z.re), rat_str(z.im)});
}

int int_field(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field: ") + key);
  return j.at(key);
}

// {"t": [...], "v": [...]} for any breakpoint/value table
template <typename F>
Json table_json(const F& f) {
  Json out = Json::object();
  out["t"] = rat_list_json(f.breaks());
  out["v"] = rat_list_json(f.values());
  return out;
}

std::pair<std::vector<Rat>, std::vector<Rat>> table_field(const Json& j, bool strict) {
  return {rat_list(member(j, "t"), strict), rat_list(member(j, "v"), strict)};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string disc_config_json(const FramedDiscConfig& a) {
  Json out = Json::object();
  out["n"] = a.arity();
  Json discs = Json::array();
  for (const LittleDisc& d : a.discs()) {
    Json entry = Json::object();
    entry["center"] = complex_json(d.center);
    entry["radius"] = rat_str(d.radius);
    entry["frame"] = complex_json(d.frame.value());
    discs.push_back(std::move(entry));
  }
  out["discs"] = std::move(discs);
  out["open"] = a.open();
  return dump(out);
}

FramedDiscConfig parse_disc_config(const std::string& text, bool strict) {
  Json j = parse_text(text);
  int n = int_field(member(j, "n"), "n");
  const Json& list = member(j, "discs");
  if (!list.is_array()) throw ParseError("discs must be a list");
  std::vector<LittleDisc> discs;
  for (const auto& entry : list) {
    LittleDisc d;
    d.center = complex_field(member(entry, "center"), strict);
    d.radius = rat_field(member(entry, "radius"), strict);
    try {
      d.frame = UnitCirclePoint(complex_field(member(entry, "frame"), strict));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("frame must lie on the unit circle");
    }
    discs.push_back(std::move(d));
  }
  if (static_cast<int>(discs.size()) != n)
    throw ParseError("n does not match the disc list");
  FramedDiscConfig cfg(std::move(discs));
  const Json& open = member(j, "open");
  if (!open.is_boolean()) throw ParseError("open must be a boolean");
  if (strict && open.get<bool>() != cfg.open())
    throw std::invalid_argument("open flag does not match the geometry");
  return cfg;
}

std::string cactus_json(const Cactus& c) {
  Json out = Json::object();
  out["n"] = c.arity();
  Json coords = Json::array();
  for (const PLCircleMap& f : c.coords()) coords.push_back(table_json(f));
  out["coords"] = std::move(coords);
  return dump(out);
}

Cactus parse_cactus(const std::string& text, bool strict) {
  Json j = parse_text(text);
  int n = int_field(member(j, "n"), "n");
  const Json& list = member(j, "coords");
  if (!list.is_array()) throw ParseError("coords must be a list");
  std::vector<PLCircleMap> coords;
  for (const auto& entry : list) {
    auto [t, v] = table_field(entry, strict);
    coords.emplace_back(std::move(t), std::move(v));
  }
  if (static_cast<int>(coords.size()) != n)
    throw ParseError("n does not match the coordinate list");
  return Cactus(n, std::move(coords));
}

std::string segment_config_json(const SegmentConfig& cfg) {
  Json out = Json::object();
  out["n"] = cfg.size();
  Json anchors = Json::array();
  for (const auto& row : cfg.anchors()) anchors.push_back(rat_list_json(row));
  out["anchors"] = std::move(anchors);
  return dump(out);
}

SegmentConfig parse_segment_config(const std::string& text, bool strict) {
  Json j = parse_text(text);
  int n = int_field(member(j, "n"), "n");
  const Json& list = member(j, "anchors");
  if (!list.is_array()) throw ParseError("anchors must be a list");
  std::vector<std::vector<Rat>> rows;
  for (const auto& entry : list) rows.push_back(rat_list(entry, strict));
  return SegmentConfig(n, std::move(rows));
}

std::string loops_json(const LoopChannels& g) {
  Json out = Json::object();
  Json channels = Json::array();
  for (const PLFunc& f : g) channels.push_back(table_json(f));
  out["channels"] = std::move(channels);
  return dump(out);
}

LoopChannels parse_loops(const std::string& text, bool strict) {
  Json j = parse_text(text);
  const Json& list = member(j, "channels");
  if (!list.is_array()) throw ParseError("channels must be a list");
  LoopChannels out;
  for (const auto& entry : list) {
    auto [t, v] = table_field(entry, strict);
    out.emplace_back(std::move(t), std::move(v));
  }
  return out;
}

}  // namespace cactuslab
