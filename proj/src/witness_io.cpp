#include <json.hpp>

#include "evord/error.hpp"
#include "evord/text_io.hpp"

namespace evord {

using nlohmann::ordered_json;

namespace {

ordered_json rationals(const std::vector<Rational>& xs) {
  auto arr = ordered_json::array();
  for (const auto& x : xs) arr.push_back(x.str());
  return arr;
}

std::vector<Rational> read_rationals(const ordered_json& arr) {
  std::vector<Rational> out;
  for (const auto& x : arr) out.push_back(Rational::parse(x.get<std::string>()));
  return out;
}

}  // namespace

std::string witness_to_json(const Witness& w) {
  ordered_json doc;
  doc["dimension"] = w.dimension();
  auto events = ordered_json::array();
  for (const auto& e : w.events) {
    ordered_json je;
    je["t"] = e.t.str();
    je["w"] = rationals(e.w);
    events.push_back(std::move(je));
  }
  doc["events"] = std::move(events);
  auto velocities = ordered_json::array();
  for (const auto& v : w.velocities) velocities.push_back(rationals(v.components));
  doc["velocities"] = std::move(velocities);
  doc["claim"] = w.claim.str();
  return doc.dump(2) + "\n";
}

Witness witness_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("witness document: ") + e.what(), e.byte);
  }
  try {
    Witness w;
    const int d = doc.at("dimension").get<int>();
    for (const auto& je : doc.at("events")) {
      Event e{Rational::parse(je.at("t").get<std::string>()), read_rationals(je.at("w"))};
      if (e.dimension() != d) throw Error("event dimension differs from header");
      w.events.push_back(std::move(e));
    }
    for (const auto& jv : doc.at("velocities")) w.velocities.push_back(Velocity{read_rationals(jv)});
    w.claim = parse_permset(doc.at("claim").get<std::string>());
    return w;
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("witness document: ") + e.what(), 0);
  }
}

}  // namespace evord
