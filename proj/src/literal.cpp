#include "zipper/literal.hpp"

#include <cctype>
#include <sstream>

#include "zipper/error.hpp"

namespace zipper {

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  std::string format_word(Alphabet alphabet, Word const& w) {
    if (w.empty()) {
      return "e";
    }
    std::string out;
    if (alphabet.size() <= 10) {
      for (Letter a : w) {
        out += static_cast<char>('0' + a);
      }
      return out;
    }
    out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
      out += (i == 0 ? "" : ",") + std::to_string(w[i]);
    }
    return out + "]";
  }

  Word parse_word(Alphabet alphabet, std::string_view text) {
    text = trim(text);
    if (text == "e" || text.empty()) {
      return Word();
    }
    std::vector<Letter> letters;
    auto push = [&](unsigned long v, std::string_view token) {
      if (!alphabet.contains(v)) {
        throw Error(ErrorKind::malformed_word,
                    "letter `" + std::string(token) + "` not below "
                        + std::to_string(alphabet.size()));
      }
      letters.push_back(static_cast<Letter>(v));
    };
    if (text.front() == '[') {
      if (text.back() != ']') {
        throw Error(ErrorKind::malformed_word,
                    "unterminated word `" + std::string(text) + "`");
      }
      std::string_view body = text.substr(1, text.size() - 2);
      while (!body.empty()) {
        auto comma = body.find(',');
        auto token = trim(body.substr(0, comma));
        if (token.empty()
            || token.find_first_not_of("0123456789") != std::string_view::npos) {
          throw Error(ErrorKind::malformed_word,
                      "bad letter in `" + std::string(text) + "`");
        }
        push(std::stoul(std::string(token)), token);
        body = comma == std::string_view::npos ? std::string_view()
                                               : body.substr(comma + 1);
      }
      return Word(std::move(letters));
    }
    if (alphabet.size() > 10) {
      throw Error(ErrorKind::malformed_word,
                  "words over more than 10 letters need the [a,b,...] form");
    }
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw Error(ErrorKind::malformed_word,
                    "bad letter `" + std::string(1, c) + "` in `"
                        + std::string(text) + "`");
      }
      push(static_cast<unsigned long>(c - '0'), std::string_view(&c, 1));
    }
    return Word(std::move(letters));
  }

  std::string format_point(Alphabet alphabet, Point const& x) {
    std::string const prefix
        = x.prefix().empty() ? "" : format_word(alphabet, x.prefix());
    return prefix + "(" + format_word(alphabet, x.period()) + ")";
  }

  Point parse_point(Alphabet alphabet, std::string_view text) {
    text       = trim(text);
    auto open  = text.rfind('(');
    if (open == std::string_view::npos || text.back() != ')') {
      throw Error(ErrorKind::malformed_word,
                  "points are written prefix(period), got `" + std::string(text)
                      + "`");
    }
    auto prefix = text.substr(0, open);
    auto period = text.substr(open + 1, text.size() - open - 2);
    Word p      = trim(prefix).empty() ? Word() : parse_word(alphabet, prefix);
    Word q      = parse_word(alphabet, period);
    if (q.empty()) {
      throw Error(ErrorKind::malformed_word, "empty period");
    }
    return Point(std::move(p), std::move(q));
  }

  std::string format_table(SimTable const& t) {
    auto const& h        = t.structure();
    auto const  alphabet = h.alphabet();
    std::string out;
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
      auto const& r = t.rows()[i];
      if (i != 0) {
        out += ";";
      }
      out += format_word(alphabet, r.source) + "->"
             + format_word(alphabet, r.target);
      if (r.germ != identity_id) {
        out += ":" + h.name(r.germ);
      }
    }
    return out;
  }

  SimTable parse_table(GroupPtr const&  group,
                       std::string_view text,
                       TableKind        kind,
                       Word             domain) {
    auto const       alphabet = group->alphabet();
    std::vector<Row> rows;
    std::size_t      row_no = 0;
    std::size_t      offset = 0;
    while (offset <= text.size()) {
      auto const end  = text.find(';', offset);
      auto const span = text.substr(
          offset, end == std::string_view::npos ? std::string_view::npos
                                                : end - offset);
      ++row_no;
      auto fail = [&](std::size_t column, std::string const& msg) {
        throw Error(ErrorKind::parse,
                    "row " + std::to_string(row_no) + ", column "
                        + std::to_string(offset + column + 1) + ": " + msg);
      };
      auto const arrow = span.find("->");
      if (arrow == std::string_view::npos) {
        fail(0, "expected `source->target`");
      }
      auto const colon = span.find(':', arrow);
      auto const target_text
          = span.substr(arrow + 2,
                        colon == std::string_view::npos ? std::string_view::npos
                                                        : colon - arrow - 2);
      Row row;
      try {
        row.source = parse_word(alphabet, span.substr(0, arrow));
      } catch (Error const& e) {
        fail(0, e.what());
      }
      try {
        row.target = parse_word(alphabet, target_text);
      } catch (Error const& e) {
        fail(arrow + 2, e.what());
      }
      if (colon != std::string_view::npos) {
        auto const name = std::string(trim(span.substr(colon + 1)));
        auto const id   = group->find(name);
        if (!id) {
          fail(colon + 1, "unknown germ `" + name + "`");
        }
        row.germ = *id;
      }
      rows.push_back(std::move(row));
      if (end == std::string_view::npos) {
        break;
      }
      offset = end + 1;
    }
    return SimTable(group, kind, std::move(domain), std::move(rows));
  }

  CanonicalElement parse_element(GroupPtr const& group, std::string_view text) {
    if (trim(text) == "id") {
      return identity_element(group);
    }
    auto table = parse_table(group, text);
    if (auto v = validate_table(table); !v.empty()) {
      std::string msg;
      for (auto const& violation : v) {
        msg += (msg.empty() ? "" : "; ") + violation.kind;
      }
      throw Error(ErrorKind::invalid_table, msg);
    }
    return reduce(table);
  }

  NamedElements parse_generators(GroupPtr const& group, std::string const& text) {
    NamedElements      out;
    std::istringstream lines(text);
    std::string        line;
    std::size_t        lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream fields(line);
      std::string        name, literal;
      if (!(fields >> name)) {
        continue;
      }
      if (!(fields >> literal)) {
        throw Error(ErrorKind::parse,
                    "line " + std::to_string(lineno) + ": missing literal");
      }
      try {
        out.emplace_back(name, parse_element(group, literal));
      } catch (Error const& e) {
        throw Error(e.kind(), "line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    return out;
  }

}  // namespace zipper
