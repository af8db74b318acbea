#include "tautcalc/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tautcalc {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "fail";
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "skipped") return Status::Skipped;
  throw std::invalid_argument("unknown status '" + s + "'");
}

Entry Entry::check(std::string name, std::string anchor, bool ok, std::string witness_if_failed,
                   Json data) {
  Entry e{std::move(name), std::move(anchor), ok ? Status::Pass : Status::Fail, std::nullopt,
          std::move(data)};
  if (!ok) e.witness = std::move(witness_if_failed);
  return e;
}

Entry Entry::skipped(std::string name, std::string anchor, std::string reason) {
  Entry e{std::move(name), std::move(anchor), Status::Skipped, std::nullopt, Json::object()};
  e.data["reason"] = std::move(reason);
  return e;
}

bool Report::passed() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const Entry& e) { return e.status == Status::Fail; });
}

int Report::exit_code() const { return passed() ? 0 : 1; }

void Report::append(const Report& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

void Report::sort_entries() {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.name < b.name; });
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["context"] = context;
  j["status"] = passed() ? "pass" : "fail";
  Json list = Json::array();
  for (const auto& e : entries) {
    Json je;
    je["name"] = e.name;
    je["anchor"] = e.anchor;
    je["status"] = to_string(e.status);
    if (e.witness) je["witness"] = *e.witness;
    je["data"] = e.data;
    list.push_back(std::move(je));
  }
  j["entries"] = std::move(list);
  return j;
}

Report Report::from_json(const Json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.context = j.at("context");
    for (const auto& je : j.at("entries")) {
      Entry e;
      e.name = je.at("name").get<std::string>();
      e.anchor = je.at("anchor").get<std::string>();
      e.status = parse_status(je.at("status").get<std::string>());
      if (je.contains("witness")) e.witness = je.at("witness").get<std::string>();
      if ((e.status == Status::Fail) != e.witness.has_value())
        throw std::invalid_argument("witness must be present exactly for failed entries");
      e.data = je.value("data", Json::object());
      r.entries.push_back(std::move(e));
    }
    if (j.contains("status") && j.at("status").get<std::string>() != (r.passed() ? "pass" : "fail"))
      throw std::invalid_argument("overall status disagrees with entries");
    return r;
  } catch (const Json::exception& ex) {
    throw std::invalid_argument(std::string("malformed report: ") + ex.what());
  }
}

namespace {

std::string cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

}  // namespace

std::string Report::to_markdown() const {
  std::ostringstream out;
  out << "## " << command << "\n\n";
  if (!context.empty()) out << "Context: `" << context.dump() << "`\n\n";
  out << "| check | anchor | status | witness |\n|---|---|---|---|\n";
  for (const auto& e : entries)
    out << "| " << cell(e.name) << " | " << cell(e.anchor) << " | " << to_string(e.status) << " | "
        << cell(e.witness.value_or("")) << " |\n";
  out << "\nOverall: " << (passed() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace tautcalc
