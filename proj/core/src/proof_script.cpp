#include "jordan/proof_script.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace jordan {

std::string_view name_of(StepKind k) {
  switch (k) {
    case StepKind::Define:
      return "Define";
    case StepKind::Substitute:
      return "Substitute";
    case StepKind::PolarizeEven:
      return "PolarizeEven";
    case StepKind::MulLeft:
      return "MulLeft";
    case StepKind::MulRight:
      return "MulRight";
    case StepKind::Combine:
      return "Combine";
    case StepKind::Cancel:
      return "Cancel";
    case StepKind::PatternABC:
      return "PatternABC";
    case StepKind::SemiprimeSquash:
      return "SemiprimeSquash";
    case StepKind::ExternalTheorem:
      return "ExternalTheorem";
    case StepKind::Assume:
      return "Assume";
  }
  return "?";
}

std::optional<StepKind> step_kind_from_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(StepKind::Assume); ++i) {
    auto k = static_cast<StepKind>(i);
    if (name_of(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view name_of(Law law) {
  switch (law) {
    case Law::centralizer:
      return "centralizer";
    case Law::gen_centralizer:
      return "gen-centralizer";
    case Law::derivation:
      return "derivation";
    case Law::gen_derivation:
      return "gen-derivation";
    case Law::difference:
      return "difference";
  }
  return "?";
}

std::optional<Law> law_from_name(std::string_view name) {
  for (Law l : {Law::centralizer, Law::gen_centralizer, Law::derivation, Law::gen_derivation, Law::difference})
    if (name_of(l) == name) return l;
  return std::nullopt;
}

std::string_view name_of(ExternalResult r) {
  switch (r) {
    case ExternalResult::commuting:
      return "commuting";
    case ExternalResult::t0_two_sided:
      return "t0-two-sided";
    case ExternalResult::d_central_derivation:
      return "d-central-derivation";
  }
  return "?";
}

std::optional<ExternalResult> external_from_name(std::string_view name) {
  for (ExternalResult r : {ExternalResult::commuting, ExternalResult::t0_two_sided, ExternalResult::d_central_derivation})
    if (name_of(r) == name) return r;
  return std::nullopt;
}

std::vector<std::string> Step::citations() const {
  return std::visit(
      [](const auto& a) -> std::vector<std::string> {
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<A, steps::Combine>) {
          std::set<std::string> labels;
          collect_citations(a.certificate, labels);
          return {labels.begin(), labels.end()};
        } else if constexpr (std::is_same_v<A, steps::Define> || std::is_same_v<A, steps::Assume>) {
          return {};
        } else {
          return {a.use};
        }
      },
      args);
}

namespace {

struct Line {
  std::string text;
  int number = 0;
};

// Joins backslash continuations and strips comments.
std::vector<Line> logical_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  Line pending;
  bool continuing = false;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.pop_back();
    bool cont = !raw.empty() && raw.back() == '\\';
    if (cont) raw.pop_back();
    if (!continuing) pending = Line{"", number};
    pending.text += raw;
    pending.text += ' ';
    continuing = cont;
    if (!cont) out.push_back(pending);
  }
  if (continuing) out.push_back(pending);
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

class StepParser {
 public:
  StepParser(const Line& line, const std::vector<Generator>& generators) : line_(line), generators_(generators) {}

  Step parse(const std::set<std::string>& defined) {
    const std::string& text = line_.text;
    auto arrow = text.find("=>");
    if (arrow == std::string::npos) throw ParseError("step is missing '=> <claimed polynomial>'", line_.number, 1);
    std::string head = text.substr(0, arrow);
    std::string claimed_text = text.substr(arrow + 2);

    auto w = words(head);
    // w[0] == "step"
    if (w.size() < 3) throw ParseError("expected 'step <label> <kind> ...'", line_.number, 1);
    Step s;
    s.line = line_.number;
    s.label = w[1];
    auto kind = step_kind_from_name(w[2]);
    if (!kind) throw ParseError("unknown step kind '" + w[2] + "'", line_.number, column_of(head, w[2]));
    s.kind = *kind;

    // Args begin after the kind word.
    std::size_t kind_at = head.find(w[2], head.find(w[1]) + w[1].size());
    std::string args = head.substr(kind_at + w[2].size());
    int args_column = static_cast<int>(kind_at + w[2].size()) + 1;
    s.args = parse_args(s.kind, args, args_column);
    s.claimed = parse_claimed(claimed_text, static_cast<int>(arrow) + 3);

    for (const auto& label : s.citations())
      if (!defined.count(label))
        throw ParseError("step " + s.label + " cites undefined label '" + label + "'", line_.number,
                         column_of(text, label));
    return s;
  }

  NCPoly parse_claimed(const std::string& text, int column) {
    tokens_ = tokenize(text, line_.number, column);
    pos_ = 0;
    NCPoly lhs = element(false);
    if (at("=")) {
      ++pos_;
      NCPoly rhs = element(false);
      lhs -= rhs;
    }
    expect_end();
    return lhs;
  }

 private:
  static int column_of(const std::string& text, const std::string& needle) {
    auto at = text.find(needle);
    return at == std::string::npos ? 1 : static_cast<int>(at) + 1;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_.number, tokens_[pos_].column);
  }

  bool at(std::string_view sym) const {
    return tokens_[pos_].kind == TokenKind::symbol && tokens_[pos_].text == sym;
  }
  bool at_word(std::string_view w) const { return tokens_[pos_].kind == TokenKind::ident && tokens_[pos_].text == w; }
  void expect(std::string_view sym) {
    if (!at(sym)) fail("expected '" + std::string(sym) + "' but found '" + tokens_[pos_].text + "'");
    ++pos_;
  }
  void expect_word(std::string_view w) {
    if (!at_word(w)) fail("expected '" + std::string(w) + "' but found '" + tokens_[pos_].text + "'");
    ++pos_;
  }
  void expect_end() {
    if (tokens_[pos_].kind != TokenKind::end) fail("unexpected trailing input '" + tokens_[pos_].text + "'");
  }

  std::string label() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::ident && t.kind != TokenKind::number) fail("expected a label");
    ++pos_;
    return t.text;
  }

  Generator generator() {
    const Token& t = tokens_[pos_];
    if (t.kind == TokenKind::ident && t.text.size() == 1)
      for (Generator g : generators_)
        if (g.name == t.text[0]) {
          ++pos_;
          return g;
        }
    fail("expected a generator");
  }

  ExprPtr expr(bool citations) {
    ExprParser p(tokens_, pos_, line_.number, generators_, citations);
    return p.parse();
  }

  NCPoly element(bool citations) {
    int column = tokens_[pos_].column;
    try {
      return as_element(evaluate(expr(citations), {}), "polynomial");
    } catch (const EvalError& e) {
      throw ParseError(e.what(), line_.number, column);
    }
  }

  ScalarPoly scalar() {
    int column = tokens_[pos_].column;
    Value v = evaluate(expr(false), {});
    if (v.kind != Value::Kind::scalar) throw ParseError("expected a scalar in m and n", line_.number, column);
    return v.scalar;
  }

  MapSym map_symbol(const std::string& word, int column) const {
    auto s = map_from_name(word);
    if (!s) throw ParseError("unknown map symbol '" + word + "'", line_.number, column);
    return *s;
  }

  StepArgs parse_args(StepKind kind, const std::string& args, int column) {
    if (kind == StepKind::Define) {
      auto w = words(args);
      if (w.empty()) throw ParseError("Define needs a law name", line_.number, column);
      auto law = law_from_name(w[0]);
      if (!law) throw ParseError("unknown law '" + w[0] + "'", line_.number, column);
      std::size_t arity = (*law == Law::centralizer || *law == Law::derivation) ? 1 : (*law == Law::difference ? 3 : 2);
      if (w.size() != arity + 1)
        throw ParseError("law '" + w[0] + "' takes " + std::to_string(arity) + " map symbol(s)", line_.number, column);
      steps::Define d{*law, {}};
      for (std::size_t i = 1; i < w.size(); ++i) d.maps.push_back(map_symbol(w[i], column));
      return d;
    }
    if (kind == StepKind::ExternalTheorem) {
      auto w = words(args);
      if (w.size() != 5 || w[1] != "use" || w[3] != "map")
        throw ParseError("expected 'ExternalTheorem <name> use <label> map <symbol>'", line_.number, column);
      auto r = external_from_name(w[0]);
      if (!r) throw ParseError("unknown external theorem '" + w[0] + "'", line_.number, column);
      return steps::ExternalTheorem{*r, w[2], map_symbol(w[4], column)};
    }

    tokens_ = tokenize(args, line_.number, column);
    pos_ = 0;
    StepArgs out;
    switch (kind) {
      case StepKind::Substitute: {
        expect_word("use");
        steps::Substitute s{label(), {}};
        ExprParser p(tokens_, pos_, line_.number, generators_, false);
        for (auto& [g, e] : p.parse_substitution()) s.sigma[g] = as_element(evaluate(e, {}), "substitution value");
        out = s;
        break;
      }
      case StepKind::PolarizeEven: {
        expect_word("use");
        steps::PolarizeEven s{label(), {}};
        expect_word("on");
        s.on = generator();
        out = s;
        break;
      }
      case StepKind::MulLeft:
      case StepKind::MulRight: {
        expect_word("use");
        steps::Multiply s{label(), {}};
        expect_word("by");
        s.by = element(false);
        if (s.by.is_zero()) fail("multiplying by zero proves nothing");
        out = s;
        break;
      }
      case StepKind::Combine:
        out = steps::Combine{expr(true)};
        break;
      case StepKind::Cancel: {
        expect_word("use");
        steps::Cancel s{label(), {}};
        expect_word("by");
        s.factor = scalar();
        if (s.factor.is_zero()) fail("cannot cancel the factor 0");
        out = s;
        break;
      }
      case StepKind::PatternABC: {
        expect_word("use");
        steps::PatternABC s{label(), {}, {}, {}, {}};
        expect_word("on");
        s.on = generator();
        expect_word("a");
        expect("=");
        s.a = element(false);
        expect(";");
        expect_word("b");
        expect("=");
        s.b = element(false);
        expect(";");
        expect_word("c");
        expect("=");
        s.c = element(false);
        out = s;
        break;
      }
      case StepKind::SemiprimeSquash: {
        expect_word("use");
        steps::SemiprimeSquash s{label(), {}, {}};
        expect_word("on");
        s.on = generator();
        expect_word("W");
        expect("=");
        s.witness = element(false);
        out = s;
        break;
      }
      case StepKind::Assume:
        out = steps::Assume{};
        break;
      default:
        fail("unsupported step kind");
    }
    expect_end();
    return out;
  }

  const Line& line_;
  const std::vector<Generator>& generators_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ProofScript parse_script(std::string_view text) {
  ProofScript script;
  std::set<std::string> defined;
  std::vector<Line> goal_lines;
  for (const Line& line : logical_lines(text)) {
    auto w = words(line.text);
    if (w.empty()) continue;
    const std::string& head = w[0];
    std::string rest = line.text.substr(line.text.find(head) + head.size());
    if (head == "theorem") {
      auto first = rest.find_first_not_of(' ');
      script.theorem = first == std::string::npos ? "" : rest.substr(first);
      while (!script.theorem.empty() && script.theorem.back() == ' ') script.theorem.pop_back();
    } else if (head == "generators") {
      script.generators.clear();
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i].size() != 1 || !std::islower(static_cast<unsigned char>(w[i][0])) ||
            std::string("mnabcW").find(w[i][0]) != std::string::npos)
          throw ParseError("invalid generator name '" + w[i] + "'", line.number, 1);
        Generator g{w[i][0]};
        for (Generator h : script.generators)
          if (h == g) throw ParseError("duplicate generator '" + w[i] + "'", line.number, 1);
        script.generators.push_back(g);
      }
      if (script.generators.empty()) throw ParseError("at least one generator is required", line.number, 1);
    } else if (head == "budget") {
      std::stringstream items(rest);
      std::string item;
      while (std::getline(items, item, ',')) {
        if (words(item).empty()) continue;
        ScalarPoly f;
        try {
          f = parse_scalar(item);
        } catch (const std::exception& e) {
          throw ParseError(std::string("bad budget factor: ") + e.what(), line.number, 1);
        }
        if (f.is_zero() || f.is_unit()) throw ParseError("budget factors must be nonzero non-units", line.number, 1);
        script.budget.push_back(f);
      }
    } else if (head == "goal") {
      goal_lines.push_back(line);
    } else if (head == "step") {
      StepParser parser(line, script.generators);
      Step s = parser.parse(defined);
      if (!defined.insert(s.label).second)
        throw ParseError("duplicate step label '" + s.label + "'", line.number, 1);
      script.steps.push_back(std::move(s));
    } else {
      throw ParseError("unknown directive '" + head + "'", line.number, 1);
    }
  }
  // Goals are parsed last so the generator declaration may come after them.
  for (const Line& line : goal_lines) {
    std::string body = line.text.substr(line.text.find("goal") + 4);
    StepParser parser(line, script.generators);
    script.goals.push_back({parser.parse_claimed(body, static_cast<int>(line.text.find("goal")) + 5), line.number});
  }
  return script;
}

ProofScript load_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open proof script '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_script(buffer.str());
}

}  // namespace jordan
