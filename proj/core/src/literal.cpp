#include "sl2voa/literal.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "sl2voa/errors.hpp"

namespace sl2voa {

namespace {

struct Arith {
  enum class Kind { num, var, add, sub, mul, div, pow, neg };
  Kind kind = Kind::num;
  Scalar value;
  std::string name;
  long exponent = 1;
  std::size_t pos = 0;
  std::vector<Arith> kids;
};

struct Expr;
struct Op;

// One summand c * x1 ... xs inside a parenthesized operator group.
struct OpWord {
  int sign = 1;
  std::vector<Arith> coeffs;
  std::vector<Op> ops;
};

struct Op {
  enum class Kind { gen_untwisted, gen_twisted, state_untwisted, state_twisted, group };
  Kind kind = Kind::gen_untwisted;
  GenElem gen;
  std::optional<StateName> state;
  std::shared_ptr<Expr> inline_state;
  Arith index;
  std::vector<OpWord> group;
  int power = 1;
  std::size_t pos = 0;
};

struct Ket {
  enum class Kind { top, eta, state, operand };
  Kind kind = Kind::top;
  Arith label;
  Arith index;
  StateName name = StateName::omega;
  std::size_t pos = 0;
};

struct Term {
  int sign = 1;
  std::vector<Arith> coeffs;
  std::vector<Arith> zpows;
  std::vector<Op> ops;
  Ket ket;
};

struct Expr {
  std::vector<Term> terms;
};

std::optional<Gen> gen_from_name(std::string_view s) {
  if (s == "h") return Gen::h;
  if (s == "e") return Gen::e;
  if (s == "f") return Gen::f;
  if (s == "h'") return Gen::hp;
  if (s == "e'") return Gen::ep;
  if (s == "f'") return Gen::fp;
  return std::nullopt;
}

std::optional<GenElem> gen_elem_from_name(std::string_view s) {
  if (s == "h''") return hpp();
  if (auto g = gen_from_name(s)) return GenElem::of(*g);
  return std::nullopt;
}

class Parser {
public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

  Arith parse_arith_all() {
    Arith a = parse_arith();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return a;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t p) const { throw ParseError(what, p); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long parse_uint() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
      if (v > 1000000000L) fail("number too large");
    }
    return v;
  }

  long parse_int() {
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    long v = parse_uint();
    return neg ? -v : v;
  }

  Scalar parse_rational() {
    long num = parse_uint();
    std::size_t save = pos_;
    if (accept('/')) {
      skip();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        long den = parse_uint();
        if (den == 0) fail("zero denominator");
        return make_scalar(num, den);
      }
      pos_ = save;
    }
    return Scalar(num);
  }

  std::string parse_identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '_' && pos_ + 1 < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
      } else {
        break;
      }
    }
    while (pos_ < s_.size() && s_[pos_] == '\'') ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  // arith := product (("+"|"-") product)*
  Arith parse_arith() {
    Arith left = parse_product();
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') return left;
      std::size_t p = pos_++;
      Arith right = parse_product();
      Arith node{c == '+' ? Arith::Kind::add : Arith::Kind::sub, {}, {}, 1, p, {std::move(left), std::move(right)}};
      left = std::move(node);
    }
  }

  bool starts_factor() {
    char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  Arith parse_product() {
    Arith left = parse_unary();
    while (true) {
      char c = peek();
      std::size_t p = pos_;
      if (c == '*' || c == '/') {
        ++pos_;
        Arith right = parse_unary();
        Arith node{c == '*' ? Arith::Kind::mul : Arith::Kind::div, {}, {}, 1, p, {std::move(left), std::move(right)}};
        left = std::move(node);
      } else if (starts_factor()) {
        Arith right = parse_power();
        Arith node{Arith::Kind::mul, {}, {}, 1, p, {std::move(left), std::move(right)}};
        left = std::move(node);
      } else {
        return left;
      }
    }
  }

  Arith parse_unary() {
    std::size_t p = pos_;
    if (accept('-')) return Arith{Arith::Kind::neg, {}, {}, 1, p, {parse_unary()}};
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  Arith parse_power() {
    Arith base = parse_atom();
    if (accept('^')) {
      std::size_t p = pos_;
      long n = accept('{') ? [&] { long v = parse_int(); expect('}'); return v; }() : parse_int();
      return Arith{Arith::Kind::pow, {}, {}, n, p, {std::move(base)}};
    }
    return base;
  }

  Arith parse_atom() {
    char c = peek();
    std::size_t p = pos_;
    if (accept('(')) {
      Arith inner = parse_arith();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Arith a;
      a.kind = Arith::Kind::num;
      a.value = Scalar(parse_uint());
      a.pos = p;
      return a;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      Arith a;
      a.kind = Arith::Kind::var;
      a.name = std::string(1, c);
      a.pos = p;
      ++pos_;
      return a;
    }
    fail("expected a number or variable");
  }

  Arith braced_arith() {
    expect('{');
    Arith a = parse_arith();
    expect('}');
    return a;
  }

  // Index after "_": "{arith}" or a signed rational.
  Arith twisted_index() {
    if (peek() == '{') return braced_arith();
    std::size_t p = pos_;
    bool neg = accept('-');
    Arith a;
    a.kind = Arith::Kind::num;
    a.value = parse_rational();
    if (neg) a.value = -a.value;
    a.pos = p;
    return a;
  }

  Expr parse_expr() {
    Expr e;
    std::size_t save = pos_;
    if (peek() == '0') {
      ++pos_;
      char c = peek();
      if (c == '\0' || c == ']') return e;
      pos_ = save;
    }
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    e.terms.push_back(parse_term(sign));
    while (true) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        e.terms.push_back(parse_term(c == '+' ? 1 : -1));
      } else {
        return e;
      }
    }
  }

  Term parse_term(int sign) {
    Term t;
    t.sign = sign;
    while (true) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t p = pos_;
        Arith a;
        a.kind = Arith::Kind::num;
        a.value = parse_rational();
        a.pos = p;
        t.coeffs.push_back(std::move(a));
      } else if (c == '{') {
        t.coeffs.push_back(braced_arith());
      } else if (c == 'z' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '^') {
        pos_ += 2;
        t.zpows.push_back(peek() == '{' ? braced_arith() : twisted_index());
      } else {
        break;
      }
      accept('*');
    }
    while (peek() != '|') {
      if (peek() == '\0') fail("expected a ket");
      t.ops.push_back(parse_op());
    }
    t.ket = parse_ket();
    return t;
  }

  // "(" [rational] gen (("+"|"-") [rational] gen)* ")"; nullopt (position restored) if not one.
  std::optional<GenElem> try_lincombo() {
    std::size_t save = pos_;
    auto restore = [&] {
      pos_ = save;
      return std::nullopt;
    };
    if (!accept('(')) return restore();
    GenElem sum;
    bool first = true;
    while (true) {
      int sign = 1;
      if (accept('-')) sign = -1;
      else if (accept('+')) sign = 1;
      else if (!first) break;
      Scalar c = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c = parse_rational();
        accept('*');
      }
      std::string id = parse_identifier();
      auto g = gen_elem_from_name(id);
      if (!g) return restore();
      GenElem term = (sign * c) * *g;
      if (first) sum = term;
      else if (sum.basis() != term.basis()) fail("generators from both bases in one combination");
      else sum += term;
      first = false;
    }
    if (!accept(')')) return restore();
    char c = peek();
    if (c != '(' && c != '_') return restore();
    return sum;
  }

  void parse_mode_suffix(Op& op, bool is_state) {
    std::size_t p = pos_;
    if (accept('(')) {
      Arith a;
      a.kind = Arith::Kind::num;
      a.pos = pos_;
      a.value = Scalar(parse_int());
      expect(')');
      op.index = a;
      op.kind = is_state ? Op::Kind::state_untwisted : Op::Kind::gen_untwisted;
    } else if (accept('_')) {
      op.index = twisted_index();
      op.kind = is_state ? Op::Kind::state_twisted : Op::Kind::gen_twisted;
    } else {
      fail_at("expected a mode \"(n)\" or \"_{q}\"", p);
    }
  }

  void parse_power_suffix(Op& op) {
    if (accept('^')) {
      long n = peek() == '{' ? [&] { expect('{'); long v = parse_int(); expect('}'); return v; }() : parse_int();
      if (n < 0) fail("negative operator power");
      op.power = static_cast<int>(n);
    }
  }

  OpWord parse_op_word(int sign) {
    OpWord w;
    if (sign == 1 && accept('-')) sign = -1;
    w.sign = sign;
    while (true) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t p = pos_;
        Arith a;
        a.kind = Arith::Kind::num;
        a.value = parse_rational();
        a.pos = p;
        w.coeffs.push_back(std::move(a));
      } else if (c == '{') {
        w.coeffs.push_back(braced_arith());
      } else {
        break;
      }
      accept('*');
    }
    while (true) {
      char c = peek();
      if (c == ')' || c == '+' || c == '-') break;
      if (c == '\0' || c == '|') fail("unterminated group");
      w.ops.push_back(parse_op());
    }
    if (w.ops.empty() && w.coeffs.empty()) fail("empty operator group");
    return w;
  }

  Op parse_op() {
    Op op;
    op.pos = (skip(), pos_);
    char c = peek();
    if (c == '(') {
      if (auto g = try_lincombo()) {
        op.gen = *g;
        parse_mode_suffix(op, false);
      } else {
        expect('(');
        op.kind = Op::Kind::group;
        op.group.push_back(parse_op_word(1));
        while (true) {
          char d = peek();
          if (d == '+' || d == '-') {
            ++pos_;
            op.group.push_back(parse_op_word(d == '+' ? 1 : -1));
          } else {
            break;
          }
        }
        expect(')');
      }
    } else if (c == '[') {
      ++pos_;
      op.inline_state = std::make_shared<Expr>(parse_expr());
      expect(']');
      parse_mode_suffix(op, true);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id = parse_identifier();
      if (auto g = gen_elem_from_name(id)) {
        op.gen = *g;
        parse_mode_suffix(op, false);
      } else if (auto s = parse_state_name(id)) {
        op.state = *s;
        parse_mode_suffix(op, true);
      } else {
        fail_at("unknown generator '" + id + "'", op.pos);
      }
    } else {
      fail("expected an operator or a ket");
    }
    parse_power_suffix(op);
    return op;
  }

  Arith ket_number() {
    if (peek() == '{') return braced_arith();
    std::size_t p = pos_;
    Arith a;
    a.kind = Arith::Kind::num;
    a.pos = p;
    a.value = Scalar(parse_int());
    return a;
  }

  Ket parse_ket() {
    Ket k;
    k.pos = (skip(), pos_);
    expect('|');
    char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t p = pos_;
      std::string id = parse_identifier();
      if (id == "eta") k.kind = Ket::Kind::eta;
      else if (id == "w") k.kind = Ket::Kind::operand;
      else if (auto s = parse_state_name(id)) {
        k.kind = Ket::Kind::state;
        k.name = *s;
      } else {
        fail_at("unknown ket '" + id + "'", p);
      }
    } else {
      k.kind = Ket::Kind::top;
      k.label = ket_number();
      expect(',');
      k.index = ket_number();
    }
    expect('>');
    return k;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Scalar eval_arith(const Arith& a, const std::map<std::string, Scalar>& vars) {
  switch (a.kind) {
    case Arith::Kind::num:
      return a.value;
    case Arith::Kind::var: {
      auto it = vars.find(a.name);
      if (it == vars.end()) throw ParseError("unbound variable '" + a.name + "'", a.pos);
      return it->second;
    }
    case Arith::Kind::add:
      return eval_arith(a.kids[0], vars) + eval_arith(a.kids[1], vars);
    case Arith::Kind::sub:
      return eval_arith(a.kids[0], vars) - eval_arith(a.kids[1], vars);
    case Arith::Kind::mul:
      return eval_arith(a.kids[0], vars) * eval_arith(a.kids[1], vars);
    case Arith::Kind::div: {
      Scalar d = eval_arith(a.kids[1], vars);
      if (d == 0) throw ParseError("division by zero", a.pos);
      return eval_arith(a.kids[0], vars) / d;
    }
    case Arith::Kind::pow: {
      Scalar base = eval_arith(a.kids[0], vars);
      long n = a.exponent;
      if (n < 0) {
        if (base == 0) throw ParseError("division by zero", a.pos);
        base = 1 / base;
        n = -n;
      }
      Scalar r = 1;
      for (long t = 0; t < n; ++t) r *= base;
      return r;
    }
    case Arith::Kind::neg:
      return -eval_arith(a.kids[0], vars);
  }
  return 0;
}

class Evaluator {
public:
  Evaluator(Session& s, int i, const Bindings& b) : session_(s), i_(i), bindings_(b) {
    vars_ = b.vars;
    vars_["k"] = Scalar(s.level());
    vars_.try_emplace("i", Scalar(i));
  }

  LaurentVector expr(const Expr& e) {
    LaurentVector out;
    for (const Term& t : e.terms) {
      Scalar c = t.sign;
      for (const Arith& a : t.coeffs) c *= eval_arith(a, vars_);
      Scalar q = 0;
      for (const Arith& a : t.zpows) q += eval_arith(a, vars_);
      if (!is_integer(2 * q)) throw ParseError("z-exponent " + to_string(q) + " is not in (1/2)Z", t.ket.pos);
      FockVector v = ket(t.ket);
      for (auto it = t.ops.rbegin(); it != t.ops.rend(); ++it) v = op(*it, v);
      out.add(q, v, c);
    }
    return out;
  }

private:
  FockVector ket(const Ket& k) {
    FockSpace& space = session_.space(i_);
    switch (k.kind) {
      case Ket::Kind::eta:
        return space.eta();
      case Ket::Kind::operand:
        if (!bindings_.operand) throw ParseError("|w> is not bound", k.pos);
        if (bindings_.operand->context() != space.id()) throw ContextMismatch("|w> lives in another module");
        return *bindings_.operand;
      case Ket::Kind::state:
        if (i_ != 0) throw ContextMismatch("named states live in V(k,0)");
        return session_.state(k.name).value;
      case Ket::Kind::top: {
        Scalar label = eval_arith(k.label, vars_);
        Scalar j = eval_arith(k.index, vars_);
        if (!is_integer(label) || !is_integer(j)) throw ParseError("ket labels must be integers", k.pos);
        if (to_long(label) != i_)
          throw ContextMismatch("ket |" + to_string(label) + "," + to_string(j) + "> outside " + to_string(space.id()));
        if (j < 0 || j > i_) {
          if (bindings_.lenient_kets) return space.zero();
          throw OutOfRange("top index " + to_string(j) + " outside 0.." + std::to_string(i_));
        }
        return space.top(static_cast<int>(to_long(j)));
      }
    }
    return space.zero();
  }

  FockVector state_value(const Op& o) {
    if (o.state) return session_.state(*o.state).value;
    Evaluator inner(session_, 0, Bindings{vars_, std::nullopt, bindings_.lenient_kets});
    LaurentVector v = inner.expr(*o.inline_state);
    for (const auto& [q, x] : v.entries())
      if (q != 0) throw ParseError("inline state carries a z-power", o.pos);
    return v.at(0).is_zero() ? session_.vacuum().zero() : v.at(0);
  }

  FockVector op(const Op& o, FockVector v) {
    for (int rep = 0; rep < o.power; ++rep) v = op_once(o, v);
    return v;
  }

  FockVector op_once(const Op& o, const FockVector& v) {
    switch (o.kind) {
      case Op::Kind::group: {
        FockVector sum = session_.space(i_).zero();
        for (const OpWord& w : o.group) {
          Scalar c = w.sign;
          for (const Arith& a : w.coeffs) c *= eval_arith(a, vars_);
          FockVector x = v;
          for (auto it = w.ops.rbegin(); it != w.ops.rend(); ++it) x = op(*it, x);
          sum.add_scaled(x, c);
        }
        return sum;
      }
      case Op::Kind::gen_untwisted:
        return session_.space(i_).apply(o.gen, static_cast<int>(to_long(o.index.value)), v);
      case Op::Kind::state_untwisted:
        return session_.modes(i_).composite_mode(state_value(o), static_cast<int>(to_long(o.index.value)), v);
      case Op::Kind::gen_twisted:
        return session_.twist(i_).twisted_gen_mode_raw(o.gen, TwistedModeIndex(eval_arith(o.index, vars_)), v);
      case Op::Kind::state_twisted:
        return session_.twist(i_).twisted_mode_raw(state_value(o), TwistedModeIndex(eval_arith(o.index, vars_)), v);
    }
    return v;
  }

  Session& session_;
  int i_;
  const Bindings& bindings_;
  std::map<std::string, Scalar> vars_;
};

std::string render_monomial(const Monomial& m, int i) {
  std::string s;
  for (const Factor& f : m.factors) s += std::string(1, "hef"[f.slot]) + "(" + std::to_string(f.mode) + ")";
  return s + "|" + std::to_string(i) + "," + std::to_string(m.top) + ">";
}

void render_term(std::ostringstream& os, bool first, const Scalar& c, const std::string& body) {
  Scalar mag = c < 0 ? Scalar(-c) : c;
  if (first) os << (c < 0 ? "-" : "");
  else os << (c < 0 ? " - " : " + ");
  if (mag != 1) os << to_string(mag) << "*";
  os << body;
}

}  // namespace

struct Literal::Node {
  Expr expr;
};

Literal parse_literal(std::string_view text) {
  Parser p(text);
  auto node = std::make_shared<Literal::Node>();
  node->expr = p.parse_all();
  return Literal(node, std::string(text));
}

LaurentVector evaluate(const Literal& lit, Session& session, int i, const Bindings& b) {
  Evaluator ev(session, i, b);
  return ev.expr(lit.root().expr);
}

FockVector evaluate_vector(const Literal& lit, Session& session, int i, const Bindings& b) {
  LaurentVector v = evaluate(lit, session, i, b);
  for (const auto& [q, x] : v.entries())
    if (q != 0) throw ParseError("expected a plain vector, found a z^" + to_string(q) + " entry", 0);
  FockVector out = v.at(0);
  return out.is_zero() ? session.space(i).zero() : out;
}

FockVector parse_vector_literal(std::string_view text, Session& session, int i) {
  return evaluate_vector(parse_literal(text), session, i);
}

Scalar evaluate_scalar(std::string_view arith, const std::map<std::string, Scalar>& vars) {
  Parser p(arith);
  return eval_arith(p.parse_arith_all(), vars);
}

std::string render(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v.terms()) {
    render_term(os, first, c, render_monomial(m, v.context().i));
    first = false;
  }
  return os.str();
}

std::string render(const LaurentVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, x] : v.entries()) {
    const std::string z = q == 0 ? "" : "z^{" + to_string(q) + "}*";
    for (const auto& [m, c] : x.terms()) {
      render_term(os, first, c, z + render_monomial(m, x.context().i));
      first = false;
    }
  }
  return os.str();
}

}  // namespace sl2voa
