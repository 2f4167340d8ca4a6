#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "cactuslab/json_io.hpp"
#include "cactuslab/sampling.hpp"
#include "cactuslab/svg_render.hpp"

using namespace cactuslab;

namespace {

Rat rat(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t hits = 0;
  for (std::size_t at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1))
    ++hits;
  return hits;
}

std::string swap_once(std::string text, const std::string& from, const std::string& to) {
  std::size_t at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

// every stroked circle in a rendered picture, as (cx, cy, r)
std::vector<std::array<double, 3>> outline_circles(const std::string& svg) {
  std::vector<std::array<double, 3>> out;
  std::size_t at = 0;
  while ((at = svg.find("<circle ", at)) != std::string::npos) {
    std::size_t end = svg.find('\n', at);
    std::string line = svg.substr(at, end - at);
    double cx = 0, cy = 0, r = 0;
    if (line.find("fill=\"none\"") != std::string::npos &&
        std::sscanf(line.c_str(), "<circle cx=\"%lf\" cy=\"%lf\" r=\"%lf\"", &cx, &cy, &r) == 3)
      out.push_back({cx, cy, r});
    at = end;
  }
  return out;
}

}  // namespace

TEST_CASE("disc configurations round trip byte for byte") {
  Rng rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    FramedDiscConfig x = random_disc_config(rng, 1 + static_cast<int>(pick(rng, 4)));
    std::string text = disc_config_json(x);
    FramedDiscConfig back = parse_disc_config(text);
    CHECK(back == x);
    CHECK(back.open() == x.open());
    CHECK(disc_config_json(back) == text);
  }

  std::string text = disc_config_json(unit_config());
  CHECK(count_of(text, "\"radius\": \"1\"") == 1);
  CHECK(count_of(text, "\"open\": false") == 1);
}

TEST_CASE("disc parsing is strict about its inputs") {
  std::string good = disc_config_json(base_config(2, rat(1, 4)));

  SUBCASE("junk and missing fields") {
    CHECK_THROWS_AS(parse_disc_config("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_disc_config("[]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_disc_config(swap_once(good, "\"discs\"", "\"blobs\"")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_disc_config(swap_once(good, "\"n\": 2", "\"n\": 3")),
                    std::invalid_argument);
  }

  SUBCASE("non-canonical rationals only pass in lenient mode") {
    std::string tweaked = swap_once(good, "\"1/4\"", "\"2/8\"");
    CHECK_THROWS_AS(parse_disc_config(tweaked), std::invalid_argument);
    CHECK(parse_disc_config(tweaked, false) == base_config(2, rat(1, 4)));
  }

  SUBCASE("the openness flag must match the geometry") {
    std::string tweaked = swap_once(good, "\"open\": true", "\"open\": false");
    CHECK_THROWS_AS(parse_disc_config(tweaked), std::invalid_argument);
    CHECK(parse_disc_config(tweaked, false).open());
  }

  SUBCASE("frames must sit on the unit circle") {
    std::string tweaked = swap_once(good, "\"frame\": [\n        \"1\",\n        \"0\"\n      ]",
                                    "\"frame\": [\n        \"1\",\n        \"1\"\n      ]");
    CHECK_THROWS_AS(parse_disc_config(tweaked), std::invalid_argument);
  }

  SUBCASE("overlapping discs are geometry errors even in lenient mode") {
    std::string tweaked = swap_once(good, "\"1/4\"", "\"9/10\"");
    CHECK_THROWS_AS(parse_disc_config(tweaked, false), std::invalid_argument);
  }
}

TEST_CASE("cacti round trip byte for byte") {
  Rng rng(103);
  std::vector<Cactus> special{base_cactus(1), base_cactus(4), pontrjagin_cactus(),
                              rotation_cactus(rat(1, 3))};
  for (const Cactus& x : special) {
    std::string text = cactus_json(x);
    Cactus back = parse_cactus(text);
    CHECK(back == x);
    CHECK(cactus_json(back) == text);
  }
  for (int trial = 0; trial < 30; ++trial) {
    Cactus x = random_cactus(rng, 1 + static_cast<int>(pick(rng, 3)));
    std::string text = cactus_json(x);
    CHECK(count_of(text, "\"t\":") == static_cast<std::size_t>(x.arity()));
    Cactus back = parse_cactus(text);
    CHECK(back == x);
    CHECK(cactus_json(back) == text);
  }

  // a coordinate table that fails the cactus conditions is refused
  std::string bad =
      "{\"n\": 1, \"coords\": [{\"t\": [\"0\", \"1\"], \"v\": [\"0\", \"2\"]}]}";
  CHECK_THROWS_AS(parse_cactus(bad, false), std::invalid_argument);
}

TEST_CASE("segment configurations round trip byte for byte") {
  Rng rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    SegmentConfig x = random_segment_config(rng, 1 + static_cast<int>(pick(rng, 5)));
    std::string text = segment_config_json(x);
    SegmentConfig back = parse_segment_config(text);
    CHECK(back == x);
    CHECK(segment_config_json(back) == text);
  }

  std::string text = segment_config_json(SegmentConfig(2, {{Rat(0)}, {rat(1, 2)}}));
  CHECK(count_of(text, "\"n\": 2") == 1);
  CHECK(count_of(text, "\"anchors\"") == 1);
  CHECK(count_of(text, "\"1/2\"") == 1);
  CHECK_THROWS_AS(parse_segment_config("{\"n\": 2, \"anchors\": [[\"0\"]]}"),
                  std::invalid_argument);
}

TEST_CASE("loops round trip byte for byte") {
  Rng rng(109);
  for (int trial = 0; trial < 30; ++trial) {
    LoopChannels x = pick(rng, 2) ? random_ut3_loop(rng) : random_circle_loop(rng);
    std::string text = loops_json(x);
    LoopChannels back = parse_loops(text);
    CHECK(back == x);
    CHECK(loops_json(back) == text);
    CHECK(count_of(text, "\"t\":") == x.size());
  }
  CHECK_THROWS_AS(parse_loops("{\"channels\": [{\"t\": [\"0\"], \"v\": [\"0\"]}]}"),
                  std::invalid_argument);
}

TEST_CASE("disc pictures are deterministic and labelled") {
  FramedDiscConfig cfg = base_config(3, rat(1, 8));
  std::string svg = render_discs(cfg);
  CHECK(svg == render_discs(parse_disc_config(disc_config_json(cfg))));
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") == 0);
  CHECK(count_of(svg, "<text") == 3);
  CHECK(count_of(svg, ">1</text>") == 1);
  CHECK(count_of(svg, ">3</text>") == 1);
  CHECK(count_of(svg, "<line") == 3);
  // the big circle plus three little ones
  CHECK(outline_circles(svg).size() == 4);
  // six decimal places, printed from exact rationals
  CHECK(count_of(svg, "cx=\"-0.666667\"") == 1);
  CHECK(count_of(svg, "r=\"0.125000\"") == 3);
  CHECK(count_of(svg, "r=\"1.000000\"") == 1);
}

TEST_CASE("cactus pictures put the lobes where they belong") {
  Cactus four = base_cactus(4);
  std::string svg = render_cactus(four);
  CHECK(svg == render_cactus(parse_cactus(cactus_json(four))));
  CHECK(count_of(svg, "<text") == 4);

  auto lobes = outline_circles(svg);
  REQUIRE(lobes.size() == 4);
  // equal support lengths give equal sizes
  for (const auto& circle : lobes) CHECK(circle[2] == doctest::Approx(0.125).epsilon(1e-9));
  // all four lobes pass through the common meeting point, which is the
  // bottom of the root circle: (0, 1/8) after the y flip
  for (const auto& circle : lobes) {
    double dx = circle[0] - 0.0, dy = circle[1] - 0.125;
    CHECK(std::sqrt(dx * dx + dy * dy) == doctest::Approx(circle[2]).epsilon(1e-6));
  }

  // a lone lobe still renders: one circle, both marked points
  std::string solo = render_cactus(rotation_cactus(rat(1, 3)));
  CHECK(outline_circles(solo).size() == 1);
  CHECK(count_of(solo, "fill=\"black\"") == 1);
  CHECK(count_of(solo, "fill=\"white\"") == 1);
}
