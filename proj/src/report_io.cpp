#include "evord/report_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "evord/error.hpp"
#include "evord/text_io.hpp"

namespace evord {

std::string format_report(const SearchReport& r) {
  std::ostringstream out;
  for (const auto& q : r.flagged) out << q.str() << "\n";
  out << "#stats\n";
  out << "#kind=" << r.kind << "\n";
  out << "#total_enumerated=" << r.total_enumerated << "\n";
  for (const auto& [k, v] : r.stats) out << "#" << k << "=" << v << "\n";
  return out.str();
}

SearchReport parse_report(std::string_view text) {
  SearchReport r;
  r.flagged = parse_permset_lines(text);
  std::istringstream in{std::string(text)};
  std::string line;
  bool trailer = false;
  while (std::getline(in, line)) {
    if (line == "#stats") {
      trailer = true;
      continue;
    }
    if (!trailer || line.empty() || line[0] != '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("report trailer line without '='", 0);
    const std::string key = line.substr(1, eq - 1);
    const std::string value = line.substr(eq + 1);
    if (key == "kind") {
      r.kind = value;
    } else if (key == "total_enumerated") {
      r.total_enumerated = std::stoull(value);
    } else {
      r.stats[key] = std::stoll(value);
    }
  }
  if (!trailer) throw ParseError("report has no #stats trailer", text.size());
  return r;
}

void write_report_file(const std::filesystem::path& path, const SearchReport& r) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + tmp.string());
    f << format_report(r);
    if (!f) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

SearchReport read_report_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_report(buf.str());
}

std::string report_to_json(const SearchReport& r) {
  nlohmann::ordered_json doc;
  doc["kind"] = r.kind;
  doc["total_enumerated"] = r.total_enumerated;
  auto flagged = nlohmann::ordered_json::array();
  for (const auto& q : r.flagged) flagged.push_back(q.str());
  doc["flagged"] = std::move(flagged);
  doc["stats"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.stats) doc["stats"][k] = v;
  if (r.resumed_from) doc["resumed_from"] = *r.resumed_from;
  return doc.dump(2) + "\n";
}

}  // namespace evord
