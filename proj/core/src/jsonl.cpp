// Copyright 2025 The FairForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>

#include <json.hpp>

#include "fairforge/textcore.hpp"
#include "fairforge/unicode.hpp"

namespace fairforge {

namespace {

using nlohmann::json;

json parse_line(const std::string& line, std::uint64_t lineno) {
  json obj = json::parse(line, nullptr, false);
  if (obj.is_discarded() || !obj.is_object()) {
    throw ParseError("malformed JSON at line " + std::to_string(lineno));
  }
  return obj;
}

}  // namespace

void for_each_labeled_segment(std::istream& in,
                              const std::function<void(Segment&&)>& fn) {
  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    json obj = parse_line(line, lineno);
    Segment seg;
    seg.id = obj.value("id", lineno);
    seg.text = nfc(obj.value("text", ""));
    seg.lang = obj.value("lang", "");
    if (obj.contains("labels")) {
      for (const auto& l : obj["labels"]) seg.labels.push_back(l.get<std::string>());
    }
    fn(std::move(seg));
  }
}

std::vector<Segment> read_labeled_segments(std::istream& in) {
  std::vector<Segment> out;
  for_each_labeled_segment(in, [&](Segment&& s) { out.push_back(std::move(s)); });
  return out;
}

std::vector<Segment> read_labeled_segments(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  try {
    return read_labeled_segments(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::size_t write_labeled_segments(std::ostream& out,
                                   std::span<const Segment> segments) {
  std::size_t count = 0;
  for (const auto& seg : segments) {
    json obj;
    obj["id"] = seg.id;
    obj["text"] = seg.text;
    obj["lang"] = seg.lang;
    obj["labels"] = seg.labels;
    out << obj.dump() << '\n';
    ++count;
  }
  if (!out) throw IoError("write failure on labeled segment stream");
  return count;
}

std::size_t write_labeled_segments(const std::filesystem::path& path,
                                   std::span<const Segment> segments) {
  std::ofstream out = open_output(path);
  return write_labeled_segments(out, segments);
}

void for_each_record(std::istream& in,
                     const std::function<void(ParallelRecord&&)>& fn) {
  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    json obj = parse_line(line, lineno);
    ParallelRecord rec;
    rec.src = obj.value("src", "");
    rec.trg = obj.value("trg", "");
    rec.origin = obj.value("origin", "");
    if (obj.contains("pivot") && !obj["pivot"].is_null()) {
      rec.pivot = obj["pivot"].get<std::string>();
    }
    if (obj.contains("tags")) {
      for (const auto& t : obj["tags"]) rec.tags.push_back(t.get<std::string>());
    }
    fn(std::move(rec));
  }
}

std::vector<ParallelRecord> read_records(std::istream& in) {
  std::vector<ParallelRecord> out;
  for_each_record(in, [&](ParallelRecord&& r) { out.push_back(std::move(r)); });
  return out;
}

std::vector<ParallelRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  try {
    return read_records(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::size_t write_records(std::ostream& out, std::span<const ParallelRecord> records) {
  std::size_t count = 0;
  for (const auto& rec : records) {
    json obj;
    obj["src"] = rec.src;
    obj["trg"] = rec.trg;
    obj["origin"] = rec.origin;
    if (rec.pivot) obj["pivot"] = *rec.pivot;
    if (!rec.tags.empty()) obj["tags"] = rec.tags;
    out << obj.dump() << '\n';
    ++count;
  }
  if (!out) throw IoError("write failure on record stream");
  return count;
}

std::size_t write_records(const std::filesystem::path& path,
                          std::span<const ParallelRecord> records) {
  std::ofstream out = open_output(path);
  return write_records(out, records);
}

}  // namespace fairforge
