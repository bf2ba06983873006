#include "nextclosure/cxt.hpp"

#include <charconv>
#include <optional>
#include <vector>

namespace nextclosure {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::optional<std::size_t> parse_count(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

class LineReader {
 public:
  explicit LineReader(std::vector<std::string_view> lines) : lines_(std::move(lines)) {}

  bool done() const { return pos_ >= lines_.size(); }
  std::size_t line_number() const { return pos_ + 1; }
  std::optional<std::string_view> peek(std::size_t ahead = 0) const {
    if (pos_ + ahead >= lines_.size()) return std::nullopt;
    return lines_[pos_ + ahead];
  }

  std::string_view take(const char* what) {
    if (done()) throw CxtParseError(line_number(), std::string("unexpected end of input, expected ") + what);
    return lines_[pos_++];
  }

  std::size_t take_count(const char* what) {
    const auto n = line_number();
    const auto line = take(what);
    auto v = parse_count(line);
    if (!v) throw CxtParseError(n, std::string("expected ") + what + ", got '" + std::string(line) + "'");
    return *v;
  }

  void take_blank(const char* what) {
    const auto n = line_number();
    if (!take(what).empty()) throw CxtParseError(n, std::string("expected blank line ") + what);
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

FormalContext parse_cxt(std::string_view text) {
  LineReader in(split_lines(text));
  if (in.done() || *in.peek() != "B") throw CxtParseError(1, "missing 'B' header");
  in.take("header");

  const auto fourth = in.peek(2);
  const bool has_name_line = !(fourth && fourth->empty());
  if (has_name_line) in.take("name line");

  const std::size_t n_objects = in.take_count("object count");
  const std::size_t n_attributes = in.take_count("attribute count");
  in.take_blank("after the counts");

  std::vector<std::string> objects, attributes;
  objects.reserve(n_objects);
  attributes.reserve(n_attributes);
  for (std::size_t i = 0; i < n_objects; ++i) objects.emplace_back(in.take("object name"));
  for (std::size_t i = 0; i < n_attributes; ++i) attributes.emplace_back(in.take("attribute name"));

  std::vector<BitSet> rows;
  rows.reserve(n_objects);
  for (std::size_t g = 0; g < n_objects; ++g) {
    const auto n = in.line_number();
    const auto line = in.take("incidence row");
    if (line.size() != n_attributes)
      throw CxtParseError(n, "row length " + std::to_string(line.size()) + " does not match attribute count " +
                                 std::to_string(n_attributes));
    BitSet row(n_attributes);
    for (std::size_t m = 0; m < n_attributes; ++m) {
      if (line[m] == 'X')
        row.set(m);
      else if (line[m] != '.')
        throw CxtParseError(n, "illegal character '" + std::string(1, line[m]) + "' in incidence row");
    }
    rows.push_back(std::move(row));
  }
  while (!in.done()) {
    const auto n = in.line_number();
    if (!in.take("trailing").empty()) throw CxtParseError(n, "unexpected content after incidence rows");
  }

  try {
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw CxtParseError(1, e.what());
  }
}

std::string write_cxt(const FormalContext& k) {
  std::string out = "B\n\n";
  out += std::to_string(k.object_count()) + "\n";
  out += std::to_string(k.attribute_count()) + "\n\n";
  for (const auto& g : k.objects()) out += g + "\n";
  for (const auto& m : k.attributes()) out += m + "\n";
  for (std::size_t g = 0; g < k.object_count(); ++g) {
    const BitSet& r = k.row(g);
    for (std::size_t m = 0; m < k.attribute_count(); ++m) out += r.test(m) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace nextclosure
