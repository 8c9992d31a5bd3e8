#pragma once

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "fsw/adequacy.hpp"
#include "fsw/bset.hpp"
#include "fsw/construction.hpp"
#include "fsw/errors.hpp"
#include "fsw/fs_core.hpp"
#include "fsw/group_elem.hpp"
#include "fsw/ramsey.hpp"
#include "fsw/suitability.hpp"

namespace fsw::io {

using json = nlohmann::json;

// --- torus / group elements ------------------------------------------------
// A group element is an array of triples [index, num, den], ascending by
// index, each triple in canonical form.

inline std::int64_t small_int(const bigint& v, const char* what) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max())
    throw parse_error(std::string(what) + " does not fit a 64-bit integer");
  return v.convert_to<std::int64_t>();
}

inline json to_json(const group_elem& g) {
  json out = json::array();
  for (const auto& [idx, val] : g.coords())
    out.push_back({idx, small_int(val.num(), "numerator"),
                   small_int(val.den(), "denominator")});
  return out;
}

inline group_elem group_elem_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("group element must be an array of triples");
  std::vector<group_elem::coord> coords;
  std::int64_t prev_idx = -1;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
        !t[1].is_number_integer() || !t[2].is_number_integer())
      throw parse_error("coordinate triple " + t.dump() +
                        " is not [index, num, den]");
    std::int64_t idx = t[0].get<std::int64_t>();
    std::int64_t num = t[1].get<std::int64_t>();
    std::int64_t den = t[2].get<std::int64_t>();
    if (idx <= prev_idx)
      throw parse_error("triple " + t.dump() + " breaks the ascending index order");
    prev_idx = idx;
    if (idx < 0 || static_cast<std::size_t>(idx) >= config::index_cap)
      throw parse_error("triple " + t.dump() + " has an index outside the cap");
    torus_elem canon(num, den);
    if (canon.num() != num || canon.den() != den)
      throw parse_error("triple " + t.dump() + " is not in canonical form (expect " +
                        canon.num().str() + "/" + canon.den().str() + ")");
    if (canon.is_zero())
      throw parse_error("triple " + t.dump() + " stores a zero coordinate");
    coords.emplace_back(static_cast<std::uint32_t>(idx), canon);
  }
  return group_elem(std::move(coords));
}

inline json to_json(const fin_seq& seq) {
  json out = json::array();
  for (const auto& g : seq) out.push_back(to_json(g));
  return out;
}

inline fin_seq fin_seq_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("sequence must be an array of group elements");
  fin_seq out;
  for (const auto& e : j) out.push_back(group_elem_from_json(e));
  return out;
}

inline json to_json(const coef_assign& c) {
  json out = json::array();
  for (const auto& [pos, coef] : c.entries) out.push_back({pos, coef});
  return out;
}

inline coef_assign coef_assign_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("assignment must be an array of [pos, coef]");
  coef_assign out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw parse_error("assignment entry " + e.dump() + " is not [pos, coef]");
    out.entries.emplace_back(e[0].get<std::size_t>(), e[1].get<int>());
  }
  return out;
}

// --- boolean group ----------------------------------------------------------
// A bset is a sorted array of member indices.

inline json to_json(bset s) {
  json out = json::array();
  for (unsigned e : s.members()) out.push_back(e);
  return out;
}

inline bset bset_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("set must be a sorted array of integers");
  std::vector<unsigned> members;
  std::int64_t prev = -1;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
      throw parse_error("set member " + e.dump() + " is not a nonnegative integer");
    std::int64_t v = e.get<std::int64_t>();
    if (v <= prev) throw parse_error("set members must be strictly increasing");
    if (v >= static_cast<std::int64_t>(config::universe_bound))
      throw parse_error("set member " + std::to_string(v) +
                        " exceeds the universe bound " +
                        std::to_string(config::universe_bound));
    prev = v;
    members.push_back(static_cast<unsigned>(v));
  }
  return bset::checked(members);
}

// families and plain element lists share the encoding
inline json to_json(const std::vector<bset>& sets) {
  json out = json::array();
  for (bset s : sets) out.push_back(to_json(s));
  return out;
}

inline bfamily bfamily_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("family must be an array of sets");
  bfamily out;
  for (const auto& e : j) out.push_back(bset_from_json(e));
  return out;
}

inline std::vector<bset> bsets_from_json(const json& j) { return bfamily_from_json(j); }

// --- certificates -----------------------------------------------------------

inline json to_json(const suitability_cert& c) {
  json w = json::object();
  for (const auto& [m, positions] : c.witnesses) w[std::to_string(m)] = positions;
  return json{{"base", to_json(c.base)},
              {"suitable", to_json(c.suitable)},
              {"m_max", c.m_max},
              {"witnesses", w}};
}

inline suitability_cert suitability_cert_from_json(const json& j) {
  suitability_cert out;
  out.base = bfamily_from_json(j.at("base"));
  out.suitable = bfamily_from_json(j.at("suitable"));
  out.m_max = j.at("m_max").get<std::size_t>();
  for (const auto& [key, val] : j.at("witnesses").items())
    out.witnesses[std::stoul(key)] = val.get<std::vector<std::size_t>>();
  return out;
}

inline json to_json(const xy_pair& p) {
  return json{{"x", to_json(p.x)}, {"y", to_json(p.y)}};
}

inline xy_pair xy_pair_from_json(const json& j) {
  return {bfamily_from_json(j.at("x")), bfamily_from_json(j.at("y"))};
}

inline json to_json(const std::vector<xy_pair>& pairs) {
  json out = json::array();
  for (const auto& p : pairs) out.push_back(to_json(p));
  return out;
}

inline std::vector<xy_pair> xy_pairs_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("pairs must be an array of {x, y}");
  std::vector<xy_pair> out;
  for (const auto& e : j) out.push_back(xy_pair_from_json(e));
  return out;
}

inline json to_json(const adequacy_witness& w) {
  return json{{"pairs", to_json(w.pairs)},
              {"m", w.m},
              {"a_seq", to_json(w.a_seq)},
              {"per_pair", w.per_pair}};
}

inline adequacy_witness adequacy_witness_from_json(const json& j) {
  adequacy_witness out;
  out.pairs = xy_pairs_from_json(j.at("pairs"));
  out.m = j.at("m").get<std::size_t>();
  out.a_seq = bsets_from_json(j.at("a_seq"));
  out.per_pair = j.at("per_pair").get<std::vector<std::vector<std::size_t>>>();
  return out;
}

// --- colorings --------------------------------------------------------------
// The cell table is a hex string, one digit per nonempty subset of the
// ground set in colex order: digit k is the color of the subset with
// bitmask k+1. Supports up to 16 colors.

inline json to_json(const coloring& c) {
  if (c.colors > 16) throw parse_error("hex cell tables support at most 16 colors");
  std::string cells;
  cells.reserve(c.cells.size());
  for (std::uint8_t v : c.cells) cells.push_back("0123456789abcdef"[v & 0xf]);
  return json{{"ground", c.ground}, {"colors", c.colors}, {"cells", cells}};
}

inline coloring coloring_from_json(const json& j) {
  coloring out;
  out.ground = j.at("ground").get<unsigned>();
  out.colors = j.at("colors").get<unsigned>();
  const std::string cells = j.at("cells").get<std::string>();
  if (cells.size() != (std::size_t(1) << out.ground) - 1)
    throw parse_error("cell table length does not match the ground size");
  for (char ch : cells) {
    int v = ch >= '0' && ch <= '9'   ? ch - '0'
            : ch >= 'a' && ch <= 'f' ? ch - 'a' + 10
                                     : -1;
    if (v < 0 || v >= static_cast<int>(out.colors))
      throw parse_error(std::string("bad cell digit '") + ch + "'");
    out.cells.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

// --- construction logs -------------------------------------------------------

inline json to_json(const ambient_set& a) {
  json out;
  if (a.span_of) {
    out["kind"] = "span";
    out["family"] = to_json(*a.span_of);
  } else {
    out["kind"] = "explicit";
    out["elems"] = to_json(*a.elems);
  }
  out["excluded"] = to_json(a.excluded);
  return out;
}

inline ambient_set ambient_from_json(const json& j) {
  ambient_set out;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "span")
    out = ambient_set::span(bfamily_from_json(j.at("family")));
  else if (kind == "explicit")
    out = ambient_set::explicit_set(bsets_from_json(j.at("elems")));
  else
    throw parse_error("ambient kind must be span or explicit");
  if (j.contains("excluded")) out = out.minus(bsets_from_json(j.at("excluded")));
  return out;
}

inline json to_json(const condition& c) {
  return json{{"w", to_json(c.w)},
              {"base_x", to_json(c.base_x)},
              {"target", to_json(c.target)}};
}

inline condition condition_from_json(const json& j) {
  return {bfamily_from_json(j.at("w")), bfamily_from_json(j.at("base_x")),
          ambient_from_json(j.at("target"))};
}

inline json to_json(const meet_record& r) {
  return json{{"pair_stages", r.pair_stages},
              {"m", r.m},
              {"witness", to_json(r.witness)},
              {"supply_consumed", r.supply_consumed}};
}

inline meet_record meet_record_from_json(const json& j) {
  meet_record out;
  out.pair_stages = j.at("pair_stages").get<std::vector<std::size_t>>();
  out.m = j.at("m").get<std::size_t>();
  out.witness = adequacy_witness_from_json(j.at("witness"));
  out.supply_consumed = j.at("supply_consumed").get<std::size_t>();
  return out;
}

inline json to_json(const stage_log& s) {
  json meets = json::array();
  for (const auto& r : s.meets) meets.push_back(to_json(r));
  json out{{"stage", s.stage},
           {"chosen_x", to_json(s.chosen_x)},
           {"built_y", to_json(s.built_y)},
           {"cert", to_json(s.cert)},
           {"meets", meets},
           {"supply_used", s.supply_used},
           {"seed", s.seed},
           {"target_side", s.target_side}};
  out["target"] = s.target ? to_json(*s.target) : json(nullptr);
  return out;
}

inline stage_log stage_log_from_json(const json& j) {
  stage_log out;
  out.stage = j.at("stage").get<std::size_t>();
  out.chosen_x = bfamily_from_json(j.at("chosen_x"));
  out.built_y = bfamily_from_json(j.at("built_y"));
  out.cert = suitability_cert_from_json(j.at("cert"));
  for (const auto& e : j.at("meets")) out.meets.push_back(meet_record_from_json(e));
  out.supply_used = j.at("supply_used").get<std::size_t>();
  out.seed = j.at("seed").get<std::uint64_t>();
  out.target_side = j.at("target_side").get<int>();
  if (j.contains("target") && !j.at("target").is_null())
    out.target = bsets_from_json(j.at("target"));
  return out;
}

inline json to_json(const std::vector<stage_log>& logs) {
  json out = json::array();
  for (const auto& s : logs) out.push_back(to_json(s));
  return out;
}

inline std::vector<stage_log> stage_logs_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("log must be an array of stage records");
  std::vector<stage_log> out;
  for (const auto& e : j) out.push_back(stage_log_from_json(e));
  return out;
}

}  // namespace fsw::io
