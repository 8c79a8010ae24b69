#include "asimkit/render.hpp"

#include <string>

namespace asimkit {
namespace {

const char* connective(IntFormula::Kind kind) {
  switch (kind) {
    case IntFormula::Kind::And: return " & ";
    case IntFormula::Kind::Or: return " | ";
    default: return " -> ";
  }
}

const char* connective(FOFormula::Kind kind) {
  switch (kind) {
    case FOFormula::Kind::And: return " & ";
    case FOFormula::Kind::Or: return " | ";
    default: return " -> ";
  }
}

void emit(const IntFormula& f, std::string& out);

void emit_operand(const IntFormula& f, std::string& out) {
  if (!f.is_binary()) {
    emit(f, out);
    return;
  }
  out += '(';
  emit(f, out);
  out += ')';
}

void emit(const IntFormula& f, std::string& out) {
  switch (f.kind()) {
    case IntFormula::Kind::Bottom:
      out += "false";
      return;
    case IntFormula::Kind::Prop:
      out += 'p';
      out += std::to_string(f.index());
      return;
    default:
      emit_operand(f.left(), out);
      out += connective(f.kind());
      emit_operand(f.right(), out);
  }
}

void emit(const ModalFormula& f, std::string& out);

void emit_operand(const ModalFormula& f, std::string& out) {
  if (f.kind() != ModalFormula::Kind::And) {
    emit(f, out);
    return;
  }
  out += '(';
  emit(f, out);
  out += ')';
}

void emit(const ModalFormula& f, std::string& out) {
  switch (f.kind()) {
    case ModalFormula::Kind::Prop:
      out += 'p';
      out += std::to_string(f.index());
      return;
    case ModalFormula::Kind::And:
      emit_operand(f.left(), out);
      out += " & ";
      emit_operand(f.right(), out);
      return;
    case ModalFormula::Kind::Neg:
      out += '~';
      emit_operand(f.body(), out);
      return;
    case ModalFormula::Kind::Box:
      out += "[] ";
      emit_operand(f.body(), out);
      return;
  }
}

void emit(const FOFormula& f, std::string& out);

void emit_wrapped(const FOFormula& f, std::string& out, bool wrap) {
  if (wrap) out += '(';
  emit(f, out);
  if (wrap) out += ')';
}

void emit(const FOFormula& f, std::string& out) {
  switch (f.kind()) {
    case FOFormula::Kind::Pred:
      out += 'P' + std::to_string(f.letter()) + '(' + f.var() + ')';
      return;
    case FOFormula::Kind::Rel:
      out += "R(" + f.var() + ',' + f.var2() + ')';
      return;
    case FOFormula::Kind::Eq:
      out += f.var() + " = " + f.var2();
      return;
    case FOFormula::Kind::Neg: {
      const FOFormula& body = f.body();
      out += '~';
      emit_wrapped(body, out, body.is_binary() || body.is_quantifier() || body.kind() == FOFormula::Kind::Eq);
      return;
    }
    case FOFormula::Kind::Forall:
    case FOFormula::Kind::Exists:
      out += f.kind() == FOFormula::Kind::Forall ? "forall " : "exists ";
      out += f.var() + ". ";
      emit_wrapped(f.body(), out, f.body().is_binary());
      return;
    default:
      emit_wrapped(f.left(), out, f.left().is_binary() || f.left().is_quantifier());
      out += connective(f.kind());
      emit_wrapped(f.right(), out, f.right().is_binary() || f.right().is_quantifier());
  }
}

}  // namespace

std::string render(const IntFormula& formula) {
  std::string out;
  emit(formula, out);
  return out;
}

std::string render(const ModalFormula& formula) {
  std::string out;
  emit(formula, out);
  return out;
}

std::string render(const FOFormula& formula) {
  std::string out;
  emit(formula, out);
  return out;
}

}  // namespace asimkit
