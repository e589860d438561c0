// Copyright 2026 The mstream Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mstream/patterns.h"

#include <cctype>

namespace mstream {

Pattern Pattern::Atom(std::string tag) {
  if (tag.empty()) throw PatternSyntaxError("empty tag");
  return Pattern(Kind::kAtom, std::move(tag), nullptr, nullptr);
}

Pattern Pattern::Sequence(Pattern first, Pattern second) {
  return Pattern(Kind::kSequence, "", std::make_shared<const Pattern>(std::move(first)),
                 std::make_shared<const Pattern>(std::move(second)));
}

Pattern Pattern::Alternation(Pattern left, Pattern right) {
  return Pattern(Kind::kAlternation, "", std::make_shared<const Pattern>(std::move(left)),
                 std::make_shared<const Pattern>(std::move(right)));
}

Pattern Pattern::Star(Pattern body) {
  return Pattern(Kind::kStar, "", std::make_shared<const Pattern>(std::move(body)), nullptr);
}

Pattern Pattern::Optional(Pattern body) {
  return Pattern(Kind::kOptional, "", std::make_shared<const Pattern>(std::move(body)), nullptr);
}

std::set<std::string> Pattern::Alphabet() const {
  if (kind_ == Kind::kAtom) return {tag_};
  std::set<std::string> out = first_->Alphabet();
  if (second_) {
    auto more = second_->Alphabet();
    out.insert(more.begin(), more.end());
  }
  return out;
}

std::string Pattern::ToString() const {
  switch (kind_) {
    case Kind::kAtom:
      return tag_;
    case Kind::kSequence:
      return "(" + first_->ToString() + "." + second_->ToString() + ")";
    case Kind::kAlternation:
      return "(" + first_->ToString() + "|" + second_->ToString() + ")";
    case Kind::kStar:
      return first_->ToString() + "*";
    case Kind::kOptional:
      return first_->ToString() + "?";
  }
  return "";
}

bool operator==(const Pattern& a, const Pattern& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == Pattern::Kind::kAtom) return a.tag_ == b.tag_;
  if (!(*a.first_ == *b.first_)) return false;
  return !a.second_ || *a.second_ == *b.second_;
}

namespace {

// Recursive-descent parser.
//   alt  := seq ('|' seq)*
//   seq  := post ('.' post)*
//   post := prim ('*' | '?')*
//   prim := ident | '(' alt ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Pattern Run() {
    Pattern p = Alt();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw PatternSyntaxError("pattern '" + std::string(text_) + "': " + what + " at offset " +
                             std::to_string(pos_));
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool Eat(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Pattern Alt() {
    Pattern p = Seq();
    while (Eat('|')) p = Pattern::Alternation(std::move(p), Seq());
    return p;
  }

  Pattern Seq() {
    Pattern p = Post();
    while (Eat('.')) p = Pattern::Sequence(std::move(p), Post());
    return p;
  }

  Pattern Post() {
    Pattern p = Prim();
    for (;;) {
      if (Eat('*')) {
        p = Pattern::Star(std::move(p));
      } else if (Eat('?')) {
        p = Pattern::Optional(std::move(p));
      } else {
        return p;
      }
    }
  }

  Pattern Prim() {
    if (Eat('(')) {
      Pattern p = Alt();
      if (!Eat(')')) Fail("expected ')'");
      return p;
    }
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) Fail(pos_ == text_.size() ? "unexpected end" : "expected tag or '('");
    return Pattern::Atom(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Pattern Pattern::Parse(std::string_view text) { return Parser(text).Run(); }

Pattern RepeatedAtom(const std::string& tag, std::size_t n) {
  if (n < 1) throw std::invalid_argument("repetition count must be >= 1");
  Pattern p = Pattern::Atom(tag);
  for (std::size_t i = 1; i < n; ++i) p = Pattern::Sequence(std::move(p), Pattern::Atom(tag));
  return p;
}

}  // namespace mstream
