#include "twoslice/cli/dsl.hpp"

#include <sstream>

#include "twoslice/fixtures.hpp"

namespace twoslice::cli {

using core::ValidationError;

namespace {

struct Token {
  std::string text;
  int line, col;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::string cur;
  int cur_line = 1, cur_col = 1;
  auto flush = [&]() {
    if (!cur.empty()) {
      out.push_back({cur, cur_line, cur_col});
      cur.clear();
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '#') {
      flush();
      while (i + 1 < text.size() && text[i + 1] != '\n') ++i;
      continue;
    }
    if (c == '\n') {
      flush();
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      flush();
      ++col;
      continue;
    }
    if (c == '{' || c == '}') {
      flush();
      out.push_back({std::string(1, c), line, col});
      ++col;
      continue;
    }
    if (cur.empty()) {
      cur_line = line;
      cur_col = col;
    }
    cur.push_back(c);
    ++col;
  }
  flush();
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  SpecFile run() {
    SpecFile spec;
    while (!eof()) {
      const Token& t = peek();
      if (t.text == "category")
        parse_category(spec);
      else if (t.text == "functor")
        parse_functor(spec);
      else if (t.text == "nat")
        parse_nat(spec);
      else if (t.text == "2category")
        parse_twocat(spec);
      else if (t.text == "marking")
        parse_marking(spec);
      else if (t.text == "opfibration")
        parse_opfib(spec);
      else if (t.text == "cocone" || t.text == "diagram")
        parse_cocone(spec, t.text);
      else if (t.text == "adjunction")
        parse_adjunction(spec);
      else
        fail("unknown block kind '" + t.text + "'");
    }
    return spec;
  }

 private:
  const std::vector<Token> toks_;
  std::size_t pos_ = 0;

  bool eof() const { return pos_ >= toks_.size(); }
  const Token& peek() const {
    if (eof()) {
      int l = toks_.empty() ? 1 : toks_.back().line;
      int c = toks_.empty() ? 1 : toks_.back().col;
      throw ParseError("unexpected end of input", l, c);
    }
    return toks_[pos_];
  }
  Token next() {
    Token t = peek();
    ++pos_;
    return t;
  }
  void expect(const std::string& s) {
    Token t = next();
    if (t.text != s) throw ParseError("expected '" + s + "', found '" + t.text + "'", t.line, t.col);
  }
  [[noreturn]] void fail(const std::string& w) {
    const Token& t = eof() ? toks_.back() : peek();
    throw ParseError(w, t.line, t.col);
  }
  std::string name_token() { return next().text; }

  void declare(SpecFile& spec, const std::string& kind, const std::string& name) {
    for (const auto& [k, n] : spec.order)
      if (n == name) throw ValidationError("DuplicateName", kind + " " + name);
    spec.order.push_back({kind, name});
  }

  CellRef cell_ref() {
    CellRef r;
    r.a = name_token();
    r.b = name_token();
    r.name = name_token();
    return r;
  }

  void parse_category(SpecFile& spec) {
    next();
    core::RawCategory raw;
    raw.name = name_token();
    declare(spec, "category", raw.name);
    expect("{");
    while (peek().text != "}") {
      std::string key = next().text;
      if (key == "objects") {
        while (peek().text != "mor" && peek().text != "id" && peek().text != "comp" &&
               peek().text != "}")
          raw.objects.push_back(name_token());
      } else if (key == "mor") {
        std::string n = name_token();
        expect(":");
        std::string s = name_token();
        expect("->");
        std::string t = name_token();
        raw.morphisms.push_back({n, s, t});
      } else if (key == "id") {
        std::string o = name_token();
        expect("=");
        raw.identities.push_back({o, name_token()});
      } else if (key == "comp") {
        std::string g = name_token();
        expect(".");
        std::string f = name_token();
        expect("=");
        raw.composites.push_back({g, f, name_token()});
      } else {
        fail("unknown category entry '" + key + "'");
      }
    }
    expect("}");
    spec.categories[raw.name] = core::build_category_ptr(raw);
    spec.raw_categories[raw.name] = raw;
  }

  void parse_functor(SpecFile& spec) {
    next();
    core::RawFunctor raw;
    raw.name = name_token();
    declare(spec, "functor", raw.name);
    expect(":");
    raw.dom = name_token();
    expect("->");
    raw.cod = name_token();
    expect("{");
    while (peek().text != "}") {
      std::string key = next().text;
      if (key == "obj") {
        std::string a = name_token();
        expect("->");
        raw.obj_map.push_back({a, name_token()});
      } else if (key == "mor") {
        std::string a = name_token();
        expect("->");
        raw.mor_map.push_back({a, name_token()});
      } else {
        fail("unknown functor entry '" + key + "'");
      }
    }
    expect("}");
    auto dom = spec.category(raw.dom);
    auto cod = spec.category(raw.cod);
    if (!dom || !cod) throw ValidationError("UnresolvedName", raw.dom + " or " + raw.cod);
    spec.functors[raw.name] = core::build_functor_by_names(dom, cod, raw);
    spec.raw_functors[raw.name] = raw;
  }

  void parse_nat(SpecFile& spec) {
    next();
    std::string name = name_token();
    declare(spec, "nat", name);
    SpecFile::RawNat raw;
    expect(":");
    raw.dom = name_token();
    expect("=>");
    raw.cod = name_token();
    expect("{");
    while (peek().text != "}") {
      expect("at");
      std::string o = name_token();
      expect("=");
      raw.at.push_back({o, name_token()});
    }
    expect("}");
    auto fi = spec.functors.find(raw.dom);
    auto gi = spec.functors.find(raw.cod);
    if (fi == spec.functors.end() || gi == spec.functors.end())
      throw ValidationError("UnresolvedName", raw.dom + " or " + raw.cod);
    const auto& f = fi->second;
    std::vector<int> comp(f.dom()->num_objects(), -1);
    for (const auto& [o, m] : raw.at) {
      int oi = f.dom()->object_index(o);
      int mi = f.cod()->morphism_index(m);
      if (oi < 0 || mi < 0) throw ValidationError("UnresolvedName", o + " or " + m);
      comp[oi] = mi;
    }
    spec.nats[name] = core::build_nat_transf(f, gi->second, comp);
    spec.raw_nats[name] = raw;
  }

  void parse_twocat(SpecFile& spec) {
    next();
    std::string name = name_token();
    declare(spec, "2category", name);
    TwoCatDef def;
    expect("{");
    while (peek().text != "}") {
      std::string key = next().text;
      if (key == "objects") {
        while (peek().text != "hom" && peek().text != "unit" && peek().text != "comp1" &&
               peek().text != "comp2" && peek().text != "}")
          def.objects.push_back(name_token());
      } else if (key == "hom") {
        std::string a = name_token(), b = name_token();
        expect("=");
        def.homs.push_back({{a, b}, name_token()});
      } else if (key == "unit") {
        std::string a = name_token();
        expect("=");
        def.units.push_back({a, name_token()});
      } else if (key == "comp1" || key == "comp2") {
        TwoCatDef::Comp c;
        c.c = name_token();
        c.b = name_token();
        c.a = name_token();
        expect(":");
        c.g = name_token();
        expect(key == "comp1" ? "." : "*");
        c.f = name_token();
        expect("=");
        c.result = name_token();
        (key == "comp1" ? def.comp1 : def.comp2).push_back(c);
      } else {
        fail("unknown 2category entry '" + key + "'");
      }
    }
    expect("}");
    two::Raw2Category raw;
    raw.name = name;
    raw.objects = def.objects;
    const int n = static_cast<int>(def.objects.size());
    auto oi = [&](const std::string& o) {
      for (int i = 0; i < n; ++i)
        if (def.objects[i] == o) return i;
      throw ValidationError("UnresolvedName", "2-category object " + o);
    };
    raw.homs.assign(n * n, fixtures::empty());
    for (const auto& [pair, cat] : def.homs) {
      auto c = spec.category(cat);
      if (!c) throw ValidationError("UnresolvedName", "hom category " + cat);
      raw.homs[oi(pair.first) * n + oi(pair.second)] = c;
    }
    raw.units.resize(n);
    for (const auto& [a, u] : def.units) raw.units[oi(a)] = u;
    for (const auto& c : def.comp1)
      raw.comp1.push_back({oi(c.a), oi(c.b), oi(c.c), c.g, c.f, c.result});
    for (const auto& c : def.comp2)
      raw.comp2.push_back({oi(c.a), oi(c.b), oi(c.c), c.g, c.f, c.result});
    spec.twocats[name] = two::build_2category_ptr(raw);
    spec.raw_twocats[name] = def;
  }

  void parse_marking(SpecFile& spec) {
    next();
    std::string name = name_token();
    declare(spec, "marking", name);
    MarkingDef def;
    expect("on");
    def.base = name_token();
    expect("{");
    while (peek().text != "}") {
      std::string key = next().text;
      if (key == "at") {
        std::string a = name_token();
        expect("=");
        def.at.push_back({a, name_token()});
      } else if (key == "on") {
        CellRef r = cell_ref();
        expect("=");
        def.on1.push_back({r, name_token()});
      } else if (key == "on2") {
        CellRef r = cell_ref();
        expect("=");
        def.on2.push_back({r, name_token()});
      } else {
        fail("unknown marking entry '" + key + "'");
      }
    }
    expect("}");
    auto base = spec.twocat(def.base);
    if (!base) throw ValidationError("UnresolvedName", "marking base " + def.base);
    groth::Marking w;
    w.base = base;
    const int n = base->num_objects();
    w.at.resize(n);
    for (const auto& [o, cat] : def.at) {
      int i = base->object_index(o);
      auto c = spec.category(cat);
      if (i < 0 || !c) throw ValidationError("UnresolvedName", o + " or " + cat);
      w.at[i] = c;
    }
    for (int i = 0; i < n; ++i)
      if (!w.at[i])
        throw ValidationError("UnresolvedName",
                              "marking value missing at " + base->object_name(i));
    w.on1.resize(n * n);
    w.on2.resize(n * n);
    std::vector<std::vector<char>> have1(n * n), have2(n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        w.on1[a * n + b].resize(base->hom(a, b).num_objects(),
                                core::identity_functor(fixtures::one()));
        w.on2[a * n + b].resize(base->hom(a, b).num_morphisms(),
                                core::identity_nat(core::identity_functor(fixtures::one())));
        have1[a * n + b].assign(base->hom(a, b).num_objects(), 0);
        have2[a * n + b].assign(base->hom(a, b).num_morphisms(), 0);
      }
    auto resolve_pair = [&](const CellRef& r) {
      int a = base->object_index(r.a), b = base->object_index(r.b);
      if (a < 0 || b < 0) throw ValidationError("UnresolvedName", r.a + " or " + r.b);
      return std::make_pair(a, b);
    };
    for (const auto& [r, fn] : def.on1) {
      auto [a, b] = resolve_pair(r);
      int i = base->hom(a, b).object_index(r.name);
      if (i < 0) throw ValidationError("UnresolvedName", "1-cell " + r.name);
      auto fi = spec.functors.find(fn);
      if (fi == spec.functors.end()) throw ValidationError("UnresolvedName", "functor " + fn);
      w.on1[a * n + b][i] = fi->second;
      have1[a * n + b][i] = 1;
    }
    for (int a = 0; a < n; ++a) {
      w.on1[a * n + a][base->unit1(a).idx] = core::identity_functor(w.at[a]);
      have1[a * n + a][base->unit1(a).idx] = 1;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (std::size_t i = 0; i < have1[a * n + b].size(); ++i)
          if (!have1[a * n + b][i])
            throw ValidationError("UnresolvedName",
                                  "marking action missing for a 1-cell of hom(" +
                                      base->object_name(a) + "," + base->object_name(b) + ")");
    for (const auto& [r, nn] : def.on2) {
      auto [a, b] = resolve_pair(r);
      int i = base->hom(a, b).morphism_index(r.name);
      if (i < 0) throw ValidationError("UnresolvedName", "2-cell " + r.name);
      auto ni = spec.nats.find(nn);
      if (ni == spec.nats.end()) throw ValidationError("UnresolvedName", "nat " + nn);
      w.on2[a * n + b][i] = ni->second;
      have2[a * n + b][i] = 1;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const auto& h = base->hom(a, b);
        for (int x = 0; x < h.num_morphisms(); ++x) {
          if (!h.is_identity(x)) continue;
          two::OneCell f{a, b, h.src(x)};
          w.on2[a * n + b][x] = core::identity_nat(w.on_one(f));
          have2[a * n + b][x] = 1;
        }
      }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (std::size_t i = 0; i < have2[a * n + b].size(); ++i)
          if (!have2[a * n + b][i])
            throw ValidationError("UnresolvedName", "marking action missing for a 2-cell");
    groth::validate_marking(w);
    spec.markings[name] = w;
    spec.raw_markings[name] = def;
  }

  void parse_opfib(SpecFile& spec) {
    next();
    std::string name = name_token();
    declare(spec, "opfibration", name);
    OpfibDef def;
    expect("{");
    while (peek().text != "}") {
      std::string key = next().text;
      if (key == "functor") {
        def.functor = name_token();
      } else if (key == "lift") {
        std::string e = name_token(), f = name_token();
        expect("=");
        def.lifts.push_back({{e, f}, name_token()});
      } else {
        fail("unknown opfibration entry '" + key + "'");
      }
    }
    expect("}");
    auto fi = spec.functors.find(def.functor);
    if (fi == spec.functors.end())
      throw ValidationError("UnresolvedName", "functor " + def.functor);
    auto t = cob::make_split_opfibration(fi->second, def.lifts);
    auto rep = cob::validate_split_opfibration(t);
    if (!rep.ok) {
      std::string w;
      for (const auto& item : rep.items)
        if (!item.pass) w = item.check + ": " + item.witness;
      throw ValidationError("NotLiftable", "opfibration " + name + " invalid: " + w);
    }
    spec.opfibrations[name] = t;
    spec.raw_opfibs[name] = def;
  }

  void parse_cocone(SpecFile& spec, const std::string& kind) {
    next();
    std::string name = name_token();
    declare(spec, kind, name);
    CoconeDef def;
    expect("{");
    while (peek().text != "}") {
      std::string key = next().text;
      if (key == "shape") {
        def.shape = name_token();
      } else if (key == "ambient") {
        def.ambient = name_token();
      } else if (key == "apex") {
        def.apex = name_token();
      } else if (key == "dobj") {
        std::string k = name_token();
        expect("=");
        def.dobj.push_back({k, name_token()});
      } else if (key == "leg") {
        std::string k = name_token();
        expect("=");
        def.leg.push_back({k, cell_ref()});
      } else if (key == "done" || key == "dtwo" || key == "str") {
        CellRef k = cell_ref();
        expect("=");
        CellRef r = cell_ref();
        if (key == "done")
          def.done.push_back({k, r});
        else if (key == "dtwo")
          def.dtwo.push_back({k, r});
        else
          def.str.push_back({k, r});
      } else {
        fail("unknown cocone entry '" + key + "'");
      }
    }
    expect("}");
    if (spec.markings.find(def.shape) == spec.markings.end())
      throw ValidationError("UnresolvedName", "shape marking " + def.shape);
    auto amb = spec.twocat(def.ambient);
    if (!amb) throw ValidationError("UnresolvedName", "ambient " + def.ambient);
    if (amb->object_index(def.apex) < 0)
      throw ValidationError("UnresolvedName", "apex " + def.apex);
    (kind == "cocone" ? spec.raw_cocones : spec.raw_diagrams)[name] = def;
  }

  void parse_twofunctor_def(TwoFunctorDef& def) {
    def.dom = name_token();
    expect("->");
    def.cod = name_token();
    expect("{");
    while (peek().text != "}") {
      std::string key = next().text;
      if (key == "obj") {
        std::string a = name_token();
        expect("=");
        def.obj.push_back({a, name_token()});
      } else if (key == "one") {
        CellRef x = cell_ref();
        expect("=");
        def.one.push_back({x, cell_ref()});
      } else if (key == "two") {
        CellRef x = cell_ref();
        expect("=");
        def.two.push_back({x, cell_ref()});
      } else {
        fail("unknown 2-functor entry '" + key + "'");
      }
    }
    expect("}");
  }

  void parse_adjunction(SpecFile& spec) {
    next();
    std::string name = name_token();
    declare(spec, "adjunction", name);
    AdjunctionDef def;
    expect("{");
    while (peek().text != "}") {
      std::string key = next().text;
      if (key == "left") {
        parse_twofunctor_def(def.left);
      } else if (key == "right") {
        parse_twofunctor_def(def.right);
      } else if (key == "unit") {
        std::string a = name_token();
        expect("=");
        def.unit_at.push_back({a, cell_ref()});
      } else if (key == "unitstr") {
        CellRef f = cell_ref();
        expect("=");
        def.unit_str.push_back({f, cell_ref()});
      } else if (key == "counit") {
        std::string a = name_token();
        expect("=");
        def.counit_at.push_back({a, cell_ref()});
      } else if (key == "counitstr") {
        CellRef f = cell_ref();
        expect("=");
        def.counit_str.push_back({f, cell_ref()});
      } else if (key == "s") {
        std::string a = name_token();
        expect("=");
        def.s_at.push_back({a, cell_ref()});
      } else if (key == "t") {
        std::string a = name_token();
        expect("=");
        def.t_at.push_back({a, cell_ref()});
      } else {
        fail("unknown adjunction entry '" + key + "'");
      }
    }
    expect("}");
    if (!spec.twocat(def.left.dom) || !spec.twocat(def.left.cod))
      throw ValidationError("UnresolvedName", def.left.dom + " or " + def.left.cod);
    spec.raw_adjunctions[name] = def;
  }
};

std::string cell_str(const CellRef& r) { return r.a + " " + r.b + " " + r.name; }

}  // namespace

CatPtr SpecFile::category(const std::string& name) const {
  auto it = categories.find(name);
  if (it != categories.end()) return it->second;
  return fixtures::catalog_category(name);
}

Cat2Ptr SpecFile::twocat(const std::string& name) const {
  auto it = twocats.find(name);
  if (it != twocats.end()) return it->second;
  auto t = fixtures::catalog_2category(name);
  if (t) return t;
  auto c = category(name);
  return c ? two::promote_category_ptr(c) : nullptr;
}

SpecFile parse_spec(const std::string& text) { return Parser(text).run(); }

std::string print_spec(const SpecFile& spec) {
  std::ostringstream os;
  for (const auto& [kind, name] : spec.order) {
    if (kind == "category") {
      const auto& raw = spec.raw_categories.at(name);
      os << "category " << name << " {\n  objects";
      for (const auto& o : raw.objects) os << " " << o;
      os << "\n";
      for (const auto& m : raw.morphisms)
        os << "  mor " << m.name << " : " << m.src << " -> " << m.tgt << "\n";
      for (const auto& [o, i] : raw.identities) os << "  id " << o << " = " << i << "\n";
      for (const auto& c : raw.composites)
        os << "  comp " << c.g << " . " << c.f << " = " << c.result << "\n";
      os << "}\n";
    } else if (kind == "functor") {
      const auto& raw = spec.raw_functors.at(name);
      os << "functor " << name << " : " << raw.dom << " -> " << raw.cod << " {\n";
      for (const auto& [a, b] : raw.obj_map) os << "  obj " << a << " -> " << b << "\n";
      for (const auto& [a, b] : raw.mor_map) os << "  mor " << a << " -> " << b << "\n";
      os << "}\n";
    } else if (kind == "nat") {
      const auto& raw = spec.raw_nats.at(name);
      os << "nat " << name << " : " << raw.dom << " => " << raw.cod << " {\n";
      for (const auto& [o, m] : raw.at) os << "  at " << o << " = " << m << "\n";
      os << "}\n";
    } else if (kind == "2category") {
      const auto& def = spec.raw_twocats.at(name);
      os << "2category " << name << " {\n  objects";
      for (const auto& o : def.objects) os << " " << o;
      os << "\n";
      for (const auto& [p, c] : def.homs)
        os << "  hom " << p.first << " " << p.second << " = " << c << "\n";
      for (const auto& [a, u] : def.units) os << "  unit " << a << " = " << u << "\n";
      for (const auto& c : def.comp1)
        os << "  comp1 " << c.c << " " << c.b << " " << c.a << " : " << c.g << " . " << c.f
           << " = " << c.result << "\n";
      for (const auto& c : def.comp2)
        os << "  comp2 " << c.c << " " << c.b << " " << c.a << " : " << c.g << " * " << c.f
           << " = " << c.result << "\n";
      os << "}\n";
    } else if (kind == "marking") {
      const auto& def = spec.raw_markings.at(name);
      os << "marking " << name << " on " << def.base << " {\n";
      for (const auto& [o, c] : def.at) os << "  at " << o << " = " << c << "\n";
      for (const auto& [r, f] : def.on1) os << "  on " << cell_str(r) << " = " << f << "\n";
      for (const auto& [r, f] : def.on2) os << "  on2 " << cell_str(r) << " = " << f << "\n";
      os << "}\n";
    } else if (kind == "opfibration") {
      const auto& def = spec.raw_opfibs.at(name);
      os << "opfibration " << name << " {\n  functor " << def.functor << "\n";
      for (const auto& [p, k] : def.lifts)
        os << "  lift " << p.first << " " << p.second << " = " << k << "\n";
      os << "}\n";
    } else if (kind == "cocone" || kind == "diagram") {
      const auto& def = (kind == "cocone" ? spec.raw_cocones : spec.raw_diagrams).at(name);
      os << kind << " " << name << " {\n";
      os << "  shape " << def.shape << "\n  ambient " << def.ambient << "\n  apex " << def.apex
         << "\n";
      for (const auto& [k, v] : def.dobj) os << "  dobj " << k << " = " << v << "\n";
      for (const auto& [k, v] : def.done)
        os << "  done " << cell_str(k) << " = " << cell_str(v) << "\n";
      for (const auto& [k, v] : def.dtwo)
        os << "  dtwo " << cell_str(k) << " = " << cell_str(v) << "\n";
      for (const auto& [k, v] : def.leg) os << "  leg " << k << " = " << cell_str(v) << "\n";
      for (const auto& [k, v] : def.str)
        os << "  str " << cell_str(k) << " = " << cell_str(v) << "\n";
      os << "}\n";
    } else if (kind == "adjunction") {
      const auto& def = spec.raw_adjunctions.at(name);
      os << "adjunction " << name << " {\n";
      auto print_tf = [&](const std::string& key, const TwoFunctorDef& tf) {
        os << "  " << key << " " << tf.dom << " -> " << tf.cod << " {\n";
        for (const auto& [a, b] : tf.obj) os << "    obj " << a << " = " << b << "\n";
        for (const auto& [x, y] : tf.one)
          os << "    one " << cell_str(x) << " = " << cell_str(y) << "\n";
        for (const auto& [x, y] : tf.two)
          os << "    two " << cell_str(x) << " = " << cell_str(y) << "\n";
        os << "  }\n";
      };
      print_tf("left", def.left);
      print_tf("right", def.right);
      for (const auto& [a, r] : def.unit_at) os << "  unit " << a << " = " << cell_str(r) << "\n";
      for (const auto& [f, r] : def.unit_str)
        os << "  unitstr " << cell_str(f) << " = " << cell_str(r) << "\n";
      for (const auto& [a, r] : def.counit_at)
        os << "  counit " << a << " = " << cell_str(r) << "\n";
      for (const auto& [f, r] : def.counit_str)
        os << "  counitstr " << cell_str(f) << " = " << cell_str(r) << "\n";
      for (const auto& [a, r] : def.s_at) os << "  s " << a << " = " << cell_str(r) << "\n";
      for (const auto& [a, r] : def.t_at) os << "  t " << a << " = " << cell_str(r) << "\n";
      os << "}\n";
    }
  }
  return os.str();
}

}  // namespace twoslice::cli
