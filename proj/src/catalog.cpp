#include "jpt/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace jpt {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s,
                                    const std::string& sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(sep, pos);
    std::string piece =
        trim(next == std::string::npos ? s.substr(pos)
                                       : s.substr(pos, next - pos));
    if (!piece.empty()) out.push_back(piece);
    if (next == std::string::npos) break;
    pos = next + sep.size();
  }
  return out;
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "yes" || v == "true") return true;
  if (v == "no" || v == "false") return false;
  bad_input("expected yes/no for '" + key + "', got '" + v + "'");
}

// "SU(2)J:A1" / "SO(1,1):so11" / "SO(1,n-1):so(1,n-1)" -> GroupSlot
GroupSlot parse_slot(const std::string& tok) {
  size_t colon = tok.rfind(':');
  if (colon == std::string::npos)
    bad_input("slot '" + tok + "' needs a :type suffix");
  GroupSlot s;
  s.display = trim(tok.substr(0, colon));
  std::string ty = trim(tok.substr(colon + 1));
  if (ty == "u1" || ty == "so11") {
    s.kind = GroupSlot::Kind::abelian;
  } else if (ty.rfind("so(", 0) == 0 && ty.back() == ')') {
    std::string inner = ty.substr(3, ty.size() - 4);
    auto comma = inner.find(',');
    if (comma == std::string::npos)
      bad_input("orthogonal slot '" + tok + "' needs so(p,q)");
    s.kind = GroupSlot::Kind::orthogonal;
    s.p = Poly::parse(inner.substr(0, comma));
    s.q = Poly::parse(inner.substr(comma + 1));
  } else {
    s.kind = GroupSlot::Kind::simple;
    s.type = parse_lie_type(ty);
  }
  return s;
}

std::string slot_token(const GroupSlot& s) {
  switch (s.kind) {
    case GroupSlot::Kind::abelian:
      return s.display + ":" + (s.display.find("U(1)") != std::string::npos
                                    ? "u1"
                                    : "so11");
    case GroupSlot::Kind::orthogonal:
      return s.display + ":so(" + s.p.str() + "," + s.q.str() + ")";
    case GroupSlot::Kind::simple:
      return s.display + ":" + s.type.str();
  }
  return s.display;
}

// Recursive-descent parse of a term list: "(5,1) + (3,27)_2 + 8_{0,0}".
class TermParser {
 public:
  explicit TermParser(const std::string& s) : s_(s) {}

  std::vector<TermTmpl> parse() {
    std::vector<TermTmpl> out;
    skip_ws();
    while (pos_ < s_.size()) {
      out.push_back(term());
      skip_ws();
      if (pos_ == s_.size()) break;
      if (s_[pos_] != '+')
        bad_input("expected '+' between terms in '" + s_ + "'");
      ++pos_;
      skip_ws();
    }
    if (out.empty()) bad_input("empty term list");
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  FactorTmpl factor() {
    skip_ws();
    FactorTmpl f;
    if (pos_ < s_.size() && s_[pos_] == '{') {
      size_t close = s_.find('}', pos_);
      if (close == std::string::npos) bad_input("missing '}' in '" + s_ + "'");
      std::string body = s_.substr(pos_ + 1, close - pos_ - 1);
      f.name = "{" + body + "}";
      f.dim = Poly::parse(body);
      f.is_expr = true;
      pos_ = close + 1;
      return f;
    }
    size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')' &&
           s_[pos_] != '+' && s_[pos_] != '_' &&
           !std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    f.name = s_.substr(start, pos_ - start);
    if (f.name.empty()) bad_input("empty factor name in '" + s_ + "'");
    return f;
  }

  TermTmpl term() {
    TermTmpl t;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      while (true) {
        t.compacts.push_back(factor());
        skip_ws();
        if (pos_ >= s_.size()) bad_input("missing ')' in '" + s_ + "'");
        if (s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (s_[pos_] == ')') {
          ++pos_;
          break;
        }
        bad_input("expected ',' or ')' in '" + s_ + "'");
      }
    } else {
      t.compacts.push_back(factor());
    }
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '_') {
      ++pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '{') {
        size_t close = s_.find('}', pos_);
        if (close == std::string::npos)
          bad_input("missing '}' after '_' in '" + s_ + "'");
        for (const std::string& c :
             split_list(s_.substr(pos_ + 1, close - pos_ - 1), ","))
          t.charges.push_back(std::stoll(c));
        pos_ = close + 1;
      } else {
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_])))
          ++pos_;
        if (pos_ == start) bad_input("missing charge after '_' in '" + s_ + "'");
        t.charges.push_back(std::stoll(s_.substr(start, pos_ - start)));
      }
    }
    return t;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

std::string term_str(const TermTmpl& t) {
  std::ostringstream os;
  if (t.compacts.size() == 1) {
    os << t.compacts[0].name;
  } else {
    os << '(';
    for (size_t i = 0; i < t.compacts.size(); ++i) {
      if (i) os << ',';
      os << t.compacts[i].name;
    }
    os << ')';
  }
  if (!t.charges.empty()) {
    os << '_';
    if (t.charges.size() > 1) {
      os << '{';
      for (size_t i = 0; i < t.charges.size(); ++i) {
        if (i) os << ',';
        os << t.charges[i];
      }
      os << '}';
    } else {
      os << t.charges[0];
    }
  }
  return os.str();
}

std::string terms_str(const std::vector<TermTmpl>& ts) {
  std::ostringstream os;
  for (size_t i = 0; i < ts.size(); ++i) {
    if (i) os << " + ";
    os << term_str(ts[i]);
  }
  return os.str();
}

struct Block {
  std::string kind, arg;
  std::vector<std::pair<std::string, std::string>> entries;
  int line = 0;

  // Single-valued key access.
  std::optional<std::string> get(const std::string& key) const {
    std::optional<std::string> found;
    for (const auto& [k, v] : entries)
      if (k == key) {
        if (found) bad_input("duplicate key '" + key + "' in [" + kind + " " +
                             arg + "]");
        found = v;
      }
    return found;
  }
  std::string need(const std::string& key) const {
    auto v = get(key);
    if (!v) bad_input("missing key '" + key + "' in [" + kind + " " + arg + "]");
    return *v;
  }
};

std::vector<Block> lex_blocks(const std::string& text,
                              const std::string& origin, int* version) {
  std::vector<Block> blocks;
  std::istringstream in(text);
  std::string line, pending;
  int lineno = 0;
  *version = 0;
  auto flush_line = [&](std::string l) {
    l = trim(l);
    if (l.empty()) return;
    if (l.front() == '[') {
      if (l.back() != ']') bad_input(origin + ": bad block header " + l);
      std::string inner = trim(l.substr(1, l.size() - 2));
      auto space = inner.find(' ');
      Block b;
      b.kind = space == std::string::npos ? inner : inner.substr(0, space);
      b.arg = space == std::string::npos ? "" : trim(inner.substr(space + 1));
      b.line = lineno;
      blocks.push_back(std::move(b));
      return;
    }
    auto colon = l.find(':');
    if (colon == std::string::npos)
      bad_input(origin + ":" + std::to_string(lineno) + ": expected key: value");
    std::string key = trim(l.substr(0, colon));
    std::string value = trim(l.substr(colon + 1));
    if (key == "version" && blocks.empty()) {
      *version = std::stoi(value);
      return;
    }
    if (blocks.empty())
      bad_input(origin + ": key '" + key + "' outside any block");
    blocks.back().entries.emplace_back(key, value);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!line.empty() && line.back() == '\\') {
      pending += line.substr(0, line.size() - 1) + " ";
      continue;
    }
    flush_line(pending + line);
    pending.clear();
  }
  if (!pending.empty()) flush_line(pending);
  return blocks;
}

}  // namespace

std::string context_str(const std::vector<GroupSlot>& slots) {
  std::string s;
  for (size_t i = 0; i < slots.size(); ++i) {
    if (i) s += " x ";
    s += slots[i].display;
  }
  return s;
}

std::string Catalog::default_path() {
  return std::string(JPT_DATA_DIR) + "/catalog.txt";
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad_input("cannot open catalog file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

const TheoryCase* Catalog::find_case(const std::string& id) const {
  for (const auto& c : cases)
    if (c.id == id) return &c;
  return nullptr;
}

const BranchingTmpl* Catalog::find_branching(const std::string& id) const {
  for (const auto& b : branchings)
    if (b.id == id) return &b;
  return nullptr;
}

const RealFormRecord* Catalog::find_declared_realform(
    const std::string& name) const {
  std::string key = name;
  auto alias = aliases.find(key);
  if (alias != aliases.end()) key = alias->second;
  for (const auto& r : realforms)
    if (r.name == key) return &r;
  return nullptr;
}

std::string Catalog::substitute(const std::string& name, long long n) {
  std::string out;
  size_t pos = 0;
  while (pos < name.size()) {
    if (name[pos] == '{') {
      size_t close = name.find('}', pos);
      if (close == std::string::npos)
        bad_input("unbalanced '{' in name '" + name + "'");
      Poly e = Poly::parse(name.substr(pos + 1, close - pos - 1));
      out += std::to_string(e.eval_int(n));
      pos = close + 1;
    } else {
      out += name[pos++];
    }
  }
  return out;
}

RealFormRecord Catalog::resolve_realform(const std::string& name,
                                         long long n) const {
  std::string concrete = substitute(name, n);
  if (const RealFormRecord* r = find_declared_realform(concrete)) return *r;
  if (auto pq = parse_orthogonal_name(concrete))
    return make_orthogonal(pq->first, pq->second);
  bad_input("unknown real form '" + concrete + "'");
}

std::vector<int> Catalog::resolve_label(const SimpleLieType& type,
                                        const std::string& name) const {
  if (name == "adj") return RootSystem::get(type).adjoint_weight();
  if (name == "1") return std::vector<int>(type.rank, 0);
  auto table = label_tables.find(type.str());
  if (table != label_tables.end())
    for (const auto& [nm, labels] : table->second)
      if (nm == name) return labels;
  // SU(2) slots: a bare integer k is the k-dimensional irrep.
  if (type.family == 'A' && type.rank == 1) {
    try {
      size_t used = 0;
      int k = std::stoi(name, &used);
      if (used == name.size() && k >= 1) return {k - 1};
    } catch (const std::exception&) {
    }
  }
  bad_input("no label named '" + name + "' for type " + type.str());
}

Factor Catalog::instantiate_factor(const GroupSlot& slot, const FactorTmpl& f,
                                   long long n) const {
  switch (slot.kind) {
    case GroupSlot::Kind::abelian:
      fail("factor template applied to an abelian slot");
    case GroupSlot::Kind::simple: {
      if (f.is_expr)
        bad_input("{expr} factor in simple slot " + slot.display);
      // Slot displays may carry a +/- subalgebra tag (USp(8)-); the tag is
      // record-level data and does not enter factor identity.
      return Factor::irrep(slot.type, resolve_label(slot.type, f.name),
                           f.name);
    }
    case GroupSlot::Kind::orthogonal: {
      long long D = slot.p.eval_int(n) + slot.q.eval_int(n);
      if (f.is_expr) {
        long long d = f.dim.eval_int(n);
        if (d < 0) bad_input("negative dimension in factor " + f.name);
        return Factor::dim_only(d, std::to_string(d));
      }
      if (f.name == "1") return Factor::dim_only(1, "1");
      if (f.name == "vec") return Factor::dim_only(D, "vec");
      if (f.name == "adj") return Factor::dim_only(D * (D - 1) / 2, "adj");
      bad_input("orthogonal slot " + slot.display + " cannot resolve '" +
                f.name + "'");
    }
  }
  fail("unreachable");
}

RepSum Catalog::instantiate_terms(const std::vector<GroupSlot>& slots,
                                  const std::vector<TermTmpl>& terms,
                                  long long n) const {
  RepSum sum;
  for (const TermTmpl& t : terms) {
    IrrepLabel label;
    size_t ci = 0, qi = 0;
    for (const GroupSlot& slot : slots) {
      if (slot.kind == GroupSlot::Kind::abelian) {
        long long charge = qi < t.charges.size() ? t.charges[qi] : 0;
        ++qi;
        label.factors.push_back(Factor::abelian(charge));
      } else {
        if (ci >= t.compacts.size())
          bad_input("term " + term_str(t) + " has too few factors for " +
                    context_str(slots));
        label.factors.push_back(instantiate_factor(slot, t.compacts[ci], n));
        ++ci;
      }
    }
    if (ci != t.compacts.size())
      bad_input("term " + term_str(t) + " has too many factors for " +
                context_str(slots));
    if (qi < t.charges.size())
      bad_input("term " + term_str(t) + " has extra charges for " +
                context_str(slots));
    sum.add(std::move(label), t.mult);
  }
  return sum;
}

BranchingRecord Catalog::instantiate(const BranchingTmpl& b,
                                     long long n) const {
  BranchingRecord r;
  r.id = b.id;
  r.parent = substitute(context_str(b.parent), n);
  r.child = substitute(context_str(b.child), n);
  r.maximal = b.maximal;
  r.symmetric = b.symmetric;
  r.variant = b.variant;
  r.pair_id = b.pair_id;
  for (const RowTmpl& row : b.rows) {
    BranchingRow out;
    out.source = instantiate_terms(b.parent, row.source, n);
    out.result = instantiate_terms(b.child, row.result, n);
    out.check_trace = row.check_trace;
    r.rows.push_back(std::move(out));
  }
  return r;
}

std::optional<JordanAlgebra> Catalog::case_jordan(const TheoryCase& c,
                                                  long long n) const {
  const std::string& j = c.jordan;
  if (j.empty() || j == "none") return std::nullopt;
  if (j.rfind("H3(", 0) == 0 && j.back() == ')')
    return JordanAlgebra::simple(
        CompositionAlgebra::by_name(j.substr(3, j.size() - 4)));
  if (j.rfind("R+Gamma(", 0) == 0 && j.back() == ')') {
    std::string inner = j.substr(8, j.size() - 9);
    auto comma = inner.find(',');
    if (comma == std::string::npos) bad_input("bad Jordan descriptor " + j);
    long long p = Poly::parse(substitute(inner.substr(0, comma), n)).eval_int(n);
    long long q = Poly::parse(substitute(inner.substr(comma + 1), n)).eval_int(n);
    return JordanAlgebra::spin_factor(static_cast<int>(p),
                                      static_cast<int>(q));
  }
  bad_input("bad Jordan descriptor '" + j + "'");
}

long long Catalog::jordan_pair_closed_form(const Rat& q) {
  struct Row {
    Rat q;
    long long dim_l, dim_str0;
  };
  static const std::vector<Row> table = {
      {Rat(8), 248, 78}, {Rat(4), 133, 35},      {Rat(2), 78, 16},
      {Rat(1), 52, 8},   {Rat(0), 28, 2},        {Rat(-2, 3), 14, 0},
  };
  for (const Row& row : table)
    if (row.q == q) {
      Rat rep = 3 * q + 3;
      if (boost::multiprecision::denominator(rep) != 1)
        fail("3q+3 not integral for q=" + q.str());
      long long total =
          8 + row.dim_str0 +
          6 * to_ll(boost::multiprecision::numerator(rep));
      if (total != row.dim_l)
        fail("closed form violated at q=" + q.str());
      return row.dim_l;
    }
  bad_input("q=" + q.str() + " is not a row of the compact table");
}

Catalog Catalog::parse_text(const std::string& text,
                            const std::string& origin) {
  Catalog cat;
  auto blocks = lex_blocks(text, origin, &cat.version);

  auto parse_slots = [&](const std::string& v) {
    std::vector<GroupSlot> slots;
    for (const std::string& tok : split_list(v, " x "))
      slots.push_back(parse_slot(tok));
    if (slots.empty()) bad_input("empty slot list");
    return slots;
  };

  for (const Block& b : blocks) {
    if (b.kind == "labels") {
      SimpleLieType t = parse_lie_type(b.arg);  // validates
      auto& table = cat.label_tables[t.str()];
      for (const auto& [name, v] : b.entries) {
        std::vector<int> labels;
        for (const std::string& x : split_list(v, ","))
          labels.push_back(std::stoi(x));
        if (static_cast<int>(labels.size()) != t.rank)
          bad_input("label '" + name + "' of " + b.arg + " has wrong rank");
        table.emplace_back(name, labels);
      }
    } else if (b.kind == "realform") {
      RealFormRecord r;
      r.name = b.arg;
      std::string cx = b.need("complex");
      if (cx == "u1") {
        r.abelian = true;
        r.compact = true;
        r.dim = 1;
      } else if (cx == "so11") {
        r.abelian = true;
        r.dim = 1;
      } else if (cx == "trivial") {
        r.dim = 0;
        r.compact = true;
      } else {
        for (const std::string& t : split_list(cx, " "))
          r.complex_types.push_back(parse_lie_type(t));
        for (const auto& t : r.complex_types) r.dim += lie_algebra_dim(t);
      }
      if (auto d = b.get("dim")) {
        if (std::stoll(*d) != r.dim)
          bad_input("realform " + r.name + ": declared dim " + *d +
                    " != complexification dim " + std::to_string(r.dim));
      }
      std::string mcs = b.need("mcs");
      if (mcs == "self") {
        r.compact = true;
        r.mcs = {r.name};
      } else if (mcs == "none") {
        r.mcs = {};
      } else {
        r.mcs = split_list(mcs, " x ");
      }
      r.character = std::stoll(b.need("character"));
      if (auto al = b.get("aliases"))
        for (const std::string& a : split_list(*al, ","))
          cat.aliases[a] = r.name;
      cat.realforms.push_back(std::move(r));
    } else if (b.kind == "branching") {
      BranchingTmpl t;
      t.id = b.arg;
      t.parent = parse_slots(b.need("parent"));
      t.child = parse_slots(b.need("child"));
      if (auto v = b.get("maximal")) t.maximal = parse_bool(*v, "maximal");
      if (auto v = b.get("symmetric"))
        t.symmetric = parse_bool(*v, "symmetric");
      if (auto v = b.get("variant")) {
        if (*v != "+" && *v != "-") bad_input("variant must be + or -");
        t.variant = (*v)[0];
      }
      if (auto v = b.get("pair")) t.pair_id = *v;
      if (auto v = b.get("note")) t.note = *v;
      for (const auto& [k, v] : b.entries) {
        if (k != "row" && k != "adjrow") continue;
        auto arrow = v.find("->");
        if (arrow == std::string::npos)
          bad_input("row in " + t.id + " needs 'source -> result'");
        RowTmpl row;
        row.source = TermParser(trim(v.substr(0, arrow))).parse();
        row.result = TermParser(trim(v.substr(arrow + 2))).parse();
        row.check_trace = (k == "adjrow");
        t.rows.push_back(std::move(row));
      }
      if (t.rows.empty()) bad_input("branching " + t.id + " has no rows");
      cat.branchings.push_back(std::move(t));
    } else if (b.kind == "case") {
      TheoryCase c;
      c.id = b.arg;
      if (auto v = b.get("title")) c.title = *v;
      if (auto v = b.get("family")) c.family = parse_bool(*v, "family");
      if (auto v = b.get("excluded")) {
        c.excluded = true;
        c.excluded_reason = *v;
      }
      if (auto v = b.get("g3")) c.g3 = *v;
      if (auto v = b.get("g5")) c.g5 = split_list(*v, " x ");
      if (auto v = b.get("jordan")) c.jordan = *v;
      if (auto v = b.get("effdim")) c.eff_dim = Poly::parse(*v);
      if (auto v = b.get("q")) c.q_param = Poly::parse(*v);
      if (auto v = b.get("susy")) c.susy = std::stoi(*v);
      if (auto v = b.get("hypersector"))
        c.hypersector = parse_bool(*v, "hypersector");
      if (auto v = b.get("branchings")) c.branchings = split_list(*v, ",");
      if (auto v = b.get("twin")) c.twin = *v;
      if (auto v = b.get("coset")) c.coset = Poly::parse(*v);
      if (auto v = b.get("conf")) c.conf = split_list(*v, " x ");
      for (const auto& [k, v] : b.entries) {
        if (k != "embed") continue;
        auto gt = v.find('>');
        if (gt == std::string::npos)
          bad_input("embed in " + c.id + " needs 'parent > subgroups'");
        c.embeds.emplace_back(trim(v.substr(0, gt)),
                              split_list(v.substr(gt + 1), " x "));
      }
      cat.cases.push_back(std::move(c));
    } else if (b.kind == "spectrum") {
      TheoryCase* c = nullptr;
      for (auto& tc : cat.cases)
        if (tc.id == b.arg) c = &tc;
      if (!c) bad_input("[spectrum " + b.arg + "] has no matching case");
      SpectrumSpec& s = c->spectrum;
      s.present = true;
      s.slots = parse_slots(b.need("slots"));
      s.bosons = TermParser(b.need("bosons")).parse();
      s.fermions = TermParser(b.need("fermions")).parse();
      if (auto v = b.get("folded-bosons"))
        s.folded_bosons = TermParser(*v).parse();
      if (auto v = b.get("folded-fermions"))
        s.folded_fermions = TermParser(*v).parse();
      if (auto v = b.get("folds")) {
        for (const std::string& f : split_list(*v, ",")) {
          auto x = f.find('x');
          if (x == std::string::npos)
            bad_input("fold '" + f + "' needs the form AxB");
          s.folds.emplace_back(std::stoi(trim(f.substr(0, x))),
                               std::stoi(trim(f.substr(x + 1))));
        }
      }
      s.spin_slot = std::stoi(b.need("spin"));
      if (auto v = b.get("rprime")) s.rprime_slot = std::stoi(*v);
      if (auto v = b.get("twoform")) s.twoform_count = std::stoi(*v);
      auto parse_tally = [&](const std::string& v) {
        std::map<std::string, Poly> tally;
        for (const std::string& item : split_list(v, ",")) {
          auto colon = item.find(':');
          if (colon == std::string::npos)
            bad_input("tally item '" + item + "' needs tag:count");
          std::string tag = trim(item.substr(0, colon));
          std::string cnt = trim(item.substr(colon + 1));
          if (cnt.front() == '{') cnt = cnt.substr(1, cnt.size() - 2);
          tally[tag] = Poly::parse(cnt);
        }
        return tally;
      };
      s.boson_tally = parse_tally(b.need("boson-tally"));
      s.fermion_tally = parse_tally(b.need("fermion-tally"));
      s.states = Poly::parse(b.need("states"));
    } else {
      bad_input(origin + ": unknown block kind [" + b.kind + "]");
    }
  }
  return cat;
}

std::string Catalog::serialize() const {
  std::ostringstream os;
  os << "version: " << version << "\n";
  for (const auto& [type, table] : label_tables) {
    os << "\n[labels " << type << "]\n";
    for (const auto& [name, labels] : table) {
      os << name << ": ";
      for (size_t i = 0; i < labels.size(); ++i)
        os << (i ? "," : "") << labels[i];
      os << "\n";
    }
  }
  for (const RealFormRecord& r : realforms) {
    os << "\n[realform " << r.name << "]\n";
    os << "complex: ";
    if (r.abelian)
      os << (r.compact ? "u1" : "so11");
    else if (r.complex_types.empty())
      os << "trivial";
    else
      for (size_t i = 0; i < r.complex_types.size(); ++i)
        os << (i ? " " : "") << r.complex_types[i].str();
    os << "\n";
    if (r.compact && !r.abelian && r.mcs.size() == 1 && r.mcs[0] == r.name) {
      os << "mcs: self\n";
    } else if (r.mcs.empty()) {
      os << "mcs: none\n";
    } else if (r.compact && r.abelian) {
      os << "mcs: self\n";
    } else {
      os << "mcs: ";
      for (size_t i = 0; i < r.mcs.size(); ++i)
        os << (i ? " x " : "") << r.mcs[i];
      os << "\n";
    }
    os << "character: " << r.character << "\n";
    std::vector<std::string> al;
    for (const auto& [a, target] : aliases)
      if (target == r.name) al.push_back(a);
    if (!al.empty()) {
      os << "aliases: ";
      for (size_t i = 0; i < al.size(); ++i) os << (i ? ", " : "") << al[i];
      os << "\n";
    }
  }
  for (const BranchingTmpl& t : branchings) {
    os << "\n[branching " << t.id << "]\n";
    os << "parent: ";
    for (size_t i = 0; i < t.parent.size(); ++i)
      os << (i ? " x " : "") << slot_token(t.parent[i]);
    os << "\nchild: ";
    for (size_t i = 0; i < t.child.size(); ++i)
      os << (i ? " x " : "") << slot_token(t.child[i]);
    os << "\n";
    if (t.maximal) os << "maximal: yes\n";
    if (t.symmetric) os << "symmetric: yes\n";
    if (t.variant) os << "variant: " << t.variant << "\n";
    if (!t.pair_id.empty()) os << "pair: " << t.pair_id << "\n";
    if (!t.note.empty()) os << "note: " << t.note << "\n";
    for (const RowTmpl& row : t.rows)
      os << (row.check_trace ? "adjrow: " : "row: ") << terms_str(row.source)
         << " -> " << terms_str(row.result) << "\n";
  }
  for (const TheoryCase& c : cases) {
    os << "\n[case " << c.id << "]\n";
    if (!c.title.empty()) os << "title: " << c.title << "\n";
    if (c.family) os << "family: yes\n";
    if (c.excluded) os << "excluded: " << c.excluded_reason << "\n";
    if (!c.g3.empty()) os << "g3: " << c.g3 << "\n";
    if (!c.g5.empty()) {
      os << "g5: ";
      for (size_t i = 0; i < c.g5.size(); ++i)
        os << (i ? " x " : "") << c.g5[i];
      os << "\n";
    }
    if (!c.jordan.empty()) os << "jordan: " << c.jordan << "\n";
    if (!c.eff_dim.is_zero()) os << "effdim: " << c.eff_dim.str() << "\n";
    os << "q: " << c.q_param.str() << "\n";
    if (c.susy) os << "susy: " << c.susy << "\n";
    if (c.hypersector) os << "hypersector: yes\n";
    if (!c.branchings.empty()) {
      os << "branchings: ";
      for (size_t i = 0; i < c.branchings.size(); ++i)
        os << (i ? ", " : "") << c.branchings[i];
      os << "\n";
    }
    if (!c.twin.empty()) os << "twin: " << c.twin << "\n";
    if (c.coset) os << "coset: " << c.coset->str() << "\n";
    if (!c.conf.empty()) {
      os << "conf: ";
      for (size_t i = 0; i < c.conf.size(); ++i)
        os << (i ? " x " : "") << c.conf[i];
      os << "\n";
    }
    for (const auto& [parent, subs] : c.embeds) {
      os << "embed: " << parent << " > ";
      for (size_t i = 0; i < subs.size(); ++i)
        os << (i ? " x " : "") << subs[i];
      os << "\n";
    }
    if (c.spectrum.present) {
      const SpectrumSpec& s = c.spectrum;
      os << "\n[spectrum " << c.id << "]\n";
      os << "slots: ";
      for (size_t i = 0; i < s.slots.size(); ++i)
        os << (i ? " x " : "") << slot_token(s.slots[i]);
      os << "\n";
      os << "bosons: " << terms_str(s.bosons) << "\n";
      os << "fermions: " << terms_str(s.fermions) << "\n";
      if (!s.folds.empty()) {
        os << "folds: ";
        for (size_t i = 0; i < s.folds.size(); ++i)
          os << (i ? ", " : "") << s.folds[i].first << "x"
             << s.folds[i].second;
        os << "\n";
      }
      if (!s.folded_bosons.empty())
        os << "folded-bosons: " << terms_str(s.folded_bosons) << "\n";
      if (!s.folded_fermions.empty())
        os << "folded-fermions: " << terms_str(s.folded_fermions) << "\n";
      os << "spin: " << s.spin_slot << "\n";
      if (s.rprime_slot) os << "rprime: " << s.rprime_slot << "\n";
      if (s.twoform_count) os << "twoform: " << s.twoform_count << "\n";
      auto tally_str = [](const std::map<std::string, Poly>& t) {
        std::string out;
        for (const auto& [tag, c2] : t) {
          if (!out.empty()) out += ", ";
          out += tag + ":" + (c2.is_constant() ? c2.str() : "{" + c2.str() + "}");
        }
        return out;
      };
      os << "boson-tally: " << tally_str(s.boson_tally) << "\n";
      os << "fermion-tally: " << tally_str(s.fermion_tally) << "\n";
      os << "states: " << s.states.str() << "\n";
    }
  }
  return os.str();
}

}  // namespace jpt
