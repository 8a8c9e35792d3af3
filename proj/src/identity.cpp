#include "qdc/identity.hpp"

#include <stdexcept>

namespace qdc {

struct Expr::Node {
  enum class Kind { Op, Zero, Identity, Graded, Sum, Scale, Compose };
  Kind kind;
  int shift = 0;
  OpHandle op;
  std::string label;
  std::function<GaussRat(int)> grade;
  GaussRat scale;
  std::shared_ptr<const Node> a, b;
};

Expr::Expr(const OpHandle& op) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Op;
  n->shift = op.shift;
  n->op = op;
  node_ = std::move(n);
}

Expr Expr::zero(int shift) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Zero;
  n->shift = shift;
  return Expr(std::move(n));
}

Expr Expr::identity() {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Identity;
  return Expr(std::move(n));
}

Expr Expr::graded_scalar(std::string label, std::function<GaussRat(int)> c) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Graded;
  n->label = std::move(label);
  n->grade = std::move(c);
  return Expr(std::move(n));
}

int Expr::shift() const { return node_->shift; }

std::string Expr::str() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::Op:
      return n.op.name;
    case Node::Kind::Zero:
      return "0";
    case Node::Kind::Identity:
      return "1";
    case Node::Kind::Graded:
      return n.label;
    case Node::Kind::Sum:
      return "(" + Expr(n.a).str() + " + " + Expr(n.b).str() + ")";
    case Node::Kind::Scale:
      return "(" + to_string(n.scale) + ")" + Expr(n.a).str();
    case Node::Kind::Compose:
      return Expr(n.a).str() + " " + Expr(n.b).str();
  }
  return "?";
}

PolyForm Expr::operator()(const PolyForm& w) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::Op:
      return n.op(w);
    case Node::Kind::Zero:
      return PolyForm(w.dim());
    case Node::Kind::Identity:
      return w;
    case Node::Kind::Graded: {
      PolyForm out(w.dim());
      for (int p : w.form_degrees()) out += n.grade(p) * w.degree_part(p);
      return out;
    }
    case Node::Kind::Sum:
      return Expr(n.a)(w) + Expr(n.b)(w);
    case Node::Kind::Scale:
      return n.scale * Expr(n.a)(w);
    case Node::Kind::Compose:
      return Expr(n.a)(Expr(n.b)(w));
  }
  throw std::logic_error("bad expression node");
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.shift() != b.shift())
    throw std::invalid_argument("sum of operators with different degree shifts: " + a.str() +
                                " and " + b.str());
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Node::Kind::Sum;
  n->shift = a.shift();
  n->a = a.node_;
  n->b = b.node_;
  return Expr(std::move(n));
}

Expr operator*(const GaussRat& c, const Expr& a) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Node::Kind::Scale;
  n->shift = a.shift();
  n->scale = c;
  n->a = a.node_;
  return Expr(std::move(n));
}

Expr operator-(const Expr& a, const Expr& b) { return a + GaussRat(-1) * b; }

Expr operator*(const Expr& a, const Expr& b) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Node::Kind::Compose;
  n->shift = a.shift() + b.shift();
  n->a = a.node_;
  n->b = b.node_;
  return Expr(std::move(n));
}

Expr comm(const Expr& a, const Expr& b) {
  const bool anti = a.odd() && b.odd();
  return anti ? a * b + b * a : a * b - b * a;
}

IdentityResult verify_identity(const std::string& label, const Expr& lhs, const Expr& rhs,
                               const std::vector<PolyForm>& basis) {
  IdentityResult r;
  r.label = label;
  r.formula = lhs.str() + " = " + rhs.str();
  for (const auto& w : basis) {
    PolyForm l = lhs(w);
    PolyForm rr = rhs(w);
    ++r.checked;
    if (!(l == rr)) {
      r.pass = false;
      r.counterexample = Counterexample{w, std::move(l), std::move(rr)};
      break;
    }
  }
  return r;
}

std::vector<PolyForm> full_basis(const FlatModel& m, const std::vector<int>& degrees, int max_degree) {
  std::vector<PolyForm> out;
  const auto monos = monomials_up_to(m.real_dim(), max_degree);
  for (int p : degrees)
    for (Mask mask : masks_of_degree(m.real_dim(), p))
      for (Monomial mono : monos) out.push_back(PolyForm::basis(m.real_dim(), mask, mono));
  return out;
}

std::vector<PolyForm> antiholomorphic_basis(const FlatModel& m, const std::vector<int>& degrees,
                                            int max_degree) {
  std::vector<PolyForm> out;
  for (int p : degrees) {
    const AntiholomorphicBasis b(m, p, max_degree);
    for (Index i = 0; i < b.size(); ++i) out.push_back(b.element(i));
  }
  return out;
}

}  // namespace qdc
