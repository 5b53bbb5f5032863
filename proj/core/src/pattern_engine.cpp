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

#include "pattern_engine.hpp"

#include <functional>
#include <stdexcept>

#include "fairforge/unicode.hpp"

namespace fairforge::detail {

namespace {

bool is_word_cp(char32_t c) { return is_letter(c) || is_digit(c) || c == U'_'; }

}  // namespace

struct CompiledPattern::Parser {
  std::u32string src;
  std::size_t pos = 0;
  int next_group = 1;

  explicit Parser(std::string_view pattern) : src(decode_utf8(pattern)) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw std::invalid_argument("pattern error at offset " + std::to_string(pos) +
                                ": " + message);
  }

  bool eat(char32_t c) {
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::vector<Node> parse_sequence() {
    std::vector<Node> seq;
    while (pos < src.size() && src[pos] != U'|' && src[pos] != U')') {
      Node atom = parse_atom();
      parse_quantifier(seq, std::move(atom));
    }
    return seq;
  }

  std::vector<std::vector<Node>> parse_alternatives() {
    std::vector<std::vector<Node>> alts;
    alts.push_back(parse_sequence());
    while (eat(U'|')) alts.push_back(parse_sequence());
    return alts;
  }

  Node parse_atom() {
    Node node;
    const char32_t c = src[pos];
    if (c == U'\\') {
      ++pos;
      if (pos >= src.size()) fail("dangling escape");
      const char32_t e = src[pos++];
      if (e == U'w') {
        node.kind = Node::Kind::kWordClass;
      } else if (e == U'S') {
        node.kind = Node::Kind::kNonSpaceClass;
      } else if (e >= U'1' && e <= U'9') {
        node.kind = Node::Kind::kBackref;
        node.group_index = static_cast<int>(e - U'0');
      } else {
        node.kind = Node::Kind::kLiteral;
        node.literal = e;
      }
      return node;
    }
    if (c == U'(') {
      ++pos;
      const bool lookahead =
          pos + 1 < src.size() && src[pos] == U'?' && src[pos + 1] == U'!';
      if (lookahead) {
        pos += 2;
        node.kind = Node::Kind::kNegLookahead;
        node.alts = parse_alternatives();
      } else {
        node.kind = Node::Kind::kGroup;
        node.group_index = next_group++;
        node.alts = parse_alternatives();
      }
      if (!eat(U')')) fail("unterminated group");
      return node;
    }
    if (c == U')' || c == U'|' || c == U'+' || c == U'?' || c == U'{') {
      fail("unexpected metacharacter");
    }
    node.kind = Node::Kind::kLiteral;
    node.literal = c;
    ++pos;
    return node;
  }

  void parse_quantifier(std::vector<Node>& seq, Node atom) {
    if (pos >= src.size() ||
        (src[pos] != U'+' && src[pos] != U'?' && src[pos] != U'{')) {
      seq.push_back(std::move(atom));
      return;
    }
    Node repeat;
    repeat.kind = Node::Kind::kRepeat;
    repeat.alts.emplace_back();
    repeat.alts[0].push_back(std::move(atom));
    const char32_t c = src[pos];
    if (c == U'+') {
      ++pos;
      repeat.min = 1;
    } else if (c == U'?') {
      ++pos;
      repeat.min = 0;
      repeat.max = 1;
    } else {
      ++pos;
      repeat.min = parse_number();
      if (eat(U',')) {
        if (pos < src.size() && src[pos] != U'}') repeat.max = parse_number();
      } else {
        repeat.max = repeat.min;
      }
      if (!eat(U'}')) fail("unterminated {} quantifier");
    }
    seq.push_back(std::move(repeat));
  }

  std::size_t parse_number() {
    if (pos >= src.size() || src[pos] < U'0' || src[pos] > U'9') fail("expected digit");
    std::size_t value = 0;
    while (pos < src.size() && src[pos] >= U'0' && src[pos] <= U'9') {
      value = value * 10 + (src[pos] - U'0');
      ++pos;
    }
    return value;
  }
};

CompiledPattern CompiledPattern::compile(std::string_view pattern) {
  Parser parser(pattern);
  CompiledPattern compiled;
  compiled.source_ = std::string(pattern);
  auto alts = parser.parse_alternatives();
  if (parser.pos != parser.src.size()) parser.fail("trailing input");
  compiled.group_count_ = parser.next_group - 1;
  if (alts.size() == 1) {
    compiled.nodes_ = std::move(alts[0]);
  } else {
    Node top;
    top.kind = Node::Kind::kGroup;
    top.group_index = 0;  // synthetic wrapper, never recorded
    top.alts = std::move(alts);
    compiled.nodes_.push_back(std::move(top));
  }
  return compiled;
}

namespace {

using Node = CompiledPattern::Node;
using Cont = std::function<bool(std::size_t)>;

class Matcher {
 public:
  Matcher(const std::u32string& text, std::vector<GroupSpan>& groups)
      : text_(text), groups_(groups) {}

  bool seq(const std::vector<Node>& s, std::size_t i, std::size_t pos,
           const Cont& k) {
    if (i == s.size()) return k(pos);
    return node(s[i], pos, [&, i](std::size_t p) { return seq(s, i + 1, p, k); });
  }

 private:
  bool node(const Node& n, std::size_t pos, const Cont& k) {
    switch (n.kind) {
      case Node::Kind::kLiteral:
        return pos < text_.size() && text_[pos] == n.literal && k(pos + 1);
      case Node::Kind::kWordClass:
        return pos < text_.size() && is_word_cp(text_[pos]) && k(pos + 1);
      case Node::Kind::kNonSpaceClass:
        return pos < text_.size() && !is_space(text_[pos]) && k(pos + 1);
      case Node::Kind::kBackref: {
        const auto idx = static_cast<std::size_t>(n.group_index);
        if (idx >= groups_.size() || !groups_[idx].set) return false;
        const GroupSpan g = groups_[idx];
        const std::size_t len = g.end - g.begin;
        if (pos + len > text_.size()) return false;
        for (std::size_t j = 0; j < len; ++j) {
          if (text_[pos + j] != text_[g.begin + j]) return false;
        }
        return k(pos + len);
      }
      case Node::Kind::kNegLookahead: {
        const std::vector<GroupSpan> saved = groups_;
        for (const auto& alt : n.alts) {
          const bool hit = seq(alt, 0, pos, [](std::size_t) { return true; });
          groups_ = saved;
          if (hit) return false;
        }
        return k(pos);
      }
      case Node::Kind::kGroup: {
        for (const auto& alt : n.alts) {
          const std::vector<GroupSpan> saved = groups_;
          const auto idx = static_cast<std::size_t>(n.group_index);
          const bool ok = seq(alt, 0, pos, [&](std::size_t p) {
            GroupSpan previous;
            if (idx > 0) {
              previous = groups_[idx];
              groups_[idx] = GroupSpan{true, pos, p};
            }
            if (k(p)) return true;
            if (idx > 0) groups_[idx] = previous;
            return false;
          });
          if (ok) return true;
          groups_ = saved;
        }
        return false;
      }
      case Node::Kind::kRepeat:
        return repeat(n, 0, pos, k);
    }
    return false;
  }

  bool repeat(const Node& n, std::size_t count, std::size_t pos, const Cont& k) {
    if (count < n.max) {
      const std::vector<GroupSpan> saved = groups_;
      const bool ok = seq(n.alts[0], 0, pos, [&](std::size_t p) {
        if (p == pos) return false;  // forbid zero-width iterations
        return repeat(n, count + 1, p, k);
      });
      if (ok) return true;
      groups_ = saved;
    }
    return count >= n.min && k(pos);
  }

  const std::u32string& text_;
  std::vector<GroupSpan>& groups_;
};

}  // namespace

std::optional<PatternMatch> CompiledPattern::match_at(const std::u32string& text,
                                                      std::size_t start) const {
  std::vector<GroupSpan> groups(static_cast<std::size_t>(group_count_) + 1);
  std::size_t end = 0;
  Matcher matcher(text, groups);
  const bool ok = matcher.seq(nodes_, 0, start, [&](std::size_t p) {
    end = p;
    return true;
  });
  if (!ok) return std::nullopt;
  PatternMatch m;
  m.end = end;
  m.groups = std::move(groups);
  return m;
}

}  // namespace fairforge::detail
