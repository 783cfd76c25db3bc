// Copyright 2026 The ozc Authors
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

#include <algorithm>
#include <set>
#include <tuple>

#include "ozc/codegen/codegen.h"
#include "ozc/codegen/python_expr.h"
#include "ozc/syntax/pretty_printer.h"

namespace ozc::codegen {
namespace {

using syntax::TypeExpr;

std::string Join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string PythonTuple(const std::vector<std::string>& names) {
  std::vector<std::string> quoted;
  for (const auto& n : names) quoted.push_back(PythonString(n));
  if (quoted.size() == 1) return "(" + quoted[0] + ",)";
  return "(" + Join(quoted, ", ") + ")";
}

// Validator guarding values of `type`, or empty when none applies.
std::string ValidatorFor(const TypeExpr& type) {
  switch (type.kind) {
    case TypeExpr::Kind::kNat: return "Nat";
    case TypeExpr::Kind::kInt:
    case TypeExpr::Kind::kSetLiteral: return "Int";
    case TypeExpr::Kind::kBool:
    case TypeExpr::Kind::kClassRef: return "";
  }
  return "";
}

std::string Validated(const std::optional<TypeExpr>& type, const std::string& value) {
  std::string validator = type ? ValidatorFor(*type) : "";
  return validator.empty() ? value : validator + "(" + value + ")";
}

bool ReadsName(const syntax::Expr& expr, const std::string& id) {
  bool found = false;
  syntax::ForEachExpr(expr, [&](const syntax::Expr& e) {
    const auto* name = e.As<syntax::NameRef>();
    if (name && name->decoration == syntax::Decoration::kNone && name->id == id) {
      found = true;
    }
  });
  return found;
}

class ModuleEmitter {
 public:
  ModuleEmitter(const sema::SemanticModel& model, const CodegenOptions& options)
      : model_(model), options_(options) {}

  GeneratedModule Emit(std::string_view source_name, std::string_view source_text) {
    GeneratedModule module;
    module.header.push_back("# Generated by ozc " + std::string(kOzcVersion) +
                            " from " + std::string(source_name) + "; do not edit.");
    module.header.push_back("# source sha256: " + Sha256Hex(source_text));

    for (const auto& cm : model_.classes) module.classes.push_back(EmitClass(cm));
    EmitValidators(module);

    if (imports_.empty()) {
      module.import_line = "import ozruntime";
    } else {
      std::vector<std::string> names(imports_.begin(), imports_.end());
      module.import_line = "from ozruntime import " + Join(names, ", ");
    }
    return module;
  }

 private:
  // --- validators -------------------------------------------------------------

  void EmitValidators(GeneratedModule& module) {
    bool nat = false;
    bool integer = false;
    auto note = [&](const TypeExpr& type) {
      std::string v = ValidatorFor(type);
      nat = nat || v == "Nat";
      integer = integer || v == "Int";
    };
    for (const auto& cls : model_.spec->classes) {
      for (const auto& c : cls.constants) note(c.type);
      if (cls.state) {
        for (const auto& v : cls.state->primary_vars) note(v.type);
        for (const auto& v : cls.state->secondary_vars) note(v.type);
      }
      for (const auto& op : cls.operations) {
        for (const auto& v : op.inputs) note(v.type);
        for (const auto& v : op.outputs) note(v.type);
      }
    }
    const std::string kIsInt = "isinstance(n, int) and not isinstance(n, bool)";
    if (nat) {
      module.validators.push_back(Validator(
          "Nat", "lambda n: " + kIsInt + " and n >= 0", "n : NAT"));
    }
    if (integer) {
      module.validators.push_back(Validator("Int", "lambda n: " + kIsInt, "n : INT"));
    }
  }

  GeneratedFunction Validator(const std::string& name, const std::string& lambda,
                              const std::string& text) {
    imports_.insert("pre");
    GeneratedFunction fn;
    fn.decorators.push_back("pre(" + lambda + ", " + PythonString(text) + ")");
    fn.name = name;
    fn.params = {"n"};
    fn.body = {"return n"};
    return fn;
  }

  // --- classes ----------------------------------------------------------------

  PyContext BaseContext(const sema::ClassModel& cm) const {
    PyContext ctx;
    ctx.model = &model_;
    ctx.cls = &cm;
    return ctx;
  }

  GeneratedClass EmitClass(const sema::ClassModel& cm) {
    const syntax::ClassDecl& cls = *cm.decl;
    GeneratedClass out;
    out.name = cls.name;

    PyContext inv_ctx = BaseContext(cm);
    inv_ctx.old_receiver = inv_ctx.new_receiver = "instance";
    inv_ctx.inside_class = false;
    std::vector<syntax::Predicate> invariants = cls.axioms;
    if (cls.state) {
      for (const auto& pred : cls.state->invariant_preds) {
        if (!cm.secondary.IsDefining(pred)) invariants.push_back(pred);
      }
    }
    for (const auto& pred : invariants) {
      imports_.insert("inv");
      out.class_wrappers.push_back("inv(lambda instance: " +
                                   RenderPythonExpr(*pred, inv_ctx) + ", " +
                                   Description(*pred) + ")");
    }

    if (!cm.secondary.empty()) {
      imports_.insert("decorate_all");
      GeneratedFunction updater;
      updater.name = "_" + cls.name + "_update_secondary";
      updater.params = {"self"};
      PyContext ctx = BaseContext(cm);
      ctx.inside_class = false;
      for (const auto& def : cm.secondary.definitions) {
        updater.body.push_back("self." + AttributeName(cm, def.var, ctx) + " = " +
                               Validated(cm.table.Find(def.var)->type,
                                         RenderPythonExpr(*def.rhs, ctx)));
      }
      out.class_wrappers.push_back("decorate_all(" + updater.name + ")");
      out.helpers.push_back(std::move(updater));
    }

    out.constructor = EmitConstructor(cm);
    if (!cls.constants.empty()) out.methods.push_back(EmitFreezer(cm));

    std::vector<std::tuple<SourcePos, bool, size_t>> order;
    for (size_t i = 0; i < cls.operations.size(); ++i) {
      order.emplace_back(cls.operations[i].span.start, false, i);
    }
    for (size_t i = 0; i < cls.op_expr_defs.size(); ++i) {
      order.emplace_back(cls.op_expr_defs[i].span.start, true, i);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [pos, is_expr, index] : order) {
      if (is_expr) {
        out.methods.push_back(EmitOpExpr(cm, cls.op_expr_defs[index], out));
      } else {
        out.methods.push_back(
            EmitOperation(cm, cls.operations[index], cm.operations[index]));
      }
    }
    return out;
  }

  GeneratedFunction EmitConstructor(const sema::ClassModel& cm) {
    GeneratedFunction fn;
    fn.name = "__init__";
    fn.params = {"self"};
    PyContext ctx = BaseContext(cm);
    const auto& plan = cm.constructor;
    for (const auto& p : plan.params) {
      fn.params.push_back(p.name);
      if (p.source == sema::CtorParam::Source::kForwarded) continue;
      fn.body.push_back("self." + AttributeName(cm, p.member, ctx) + " = " +
                        Validated(p.type, p.name));
    }
    for (const auto& action : plan.actions) {
      std::string target = "self." + AttributeName(cm, action.target, ctx);
      if (action.kind == sema::InitAction::Kind::kAssign) {
        fn.body.push_back(target + " = " +
                          Validated(cm.table.Find(action.target)->type,
                                    RenderPythonExpr(*action.rhs, ctx)));
        continue;
      }
      std::vector<std::string> args;
      for (const auto& p : plan.params) {
        if (p.source == sema::CtorParam::Source::kForwarded && p.member == action.target) {
          args.push_back(p.inner + "=" + p.name);
        }
      }
      fn.body.push_back(target + " = " + action.class_name + "(" + Join(args, ", ") + ")");
    }
    return fn;
  }

  GeneratedFunction EmitFreezer(const sema::ClassModel& cm) {
    imports_.insert("FrozenConstantViolation");
    PyContext ctx = BaseContext(cm);
    ctx.inside_class = false;  // the tuple holds runtime attribute names
    std::vector<std::string> names;
    for (const auto& c : cm.decl->constants) names.push_back(AttributeName(cm, c.name, ctx));
    GeneratedFunction fn;
    fn.name = "__setattr__";
    fn.params = {"self", "name", "value"};
    fn.body = {
        "if name in " + PythonTuple(names) + " and name in self.__dict__:",
        "    raise FrozenConstantViolation(" + PythonString(cm.decl->name) + ", name)",
        "object.__setattr__(self, name, value)",
    };
    return fn;
  }

  // --- operations -------------------------------------------------------------

  GeneratedFunction EmitOperation(const sema::ClassModel& cm,
                                  const syntax::OperationSchema& schema,
                                  const sema::ClassifiedOperation& op) {
    GeneratedFunction fn;
    PyContext ctx = BaseContext(cm);
    fn.name = AttributeName(cm, op.name, ctx);
    fn.params = {"self"};
    std::vector<std::string> inputs;
    for (const auto& in : schema.inputs) {
      inputs.push_back(in.name);
      ctx.locals[in.name] = in.type;
    }
    for (const auto& o : schema.outputs) ctx.locals[o.name] = o.type;
    fn.params.insert(fn.params.end(), inputs.begin(), inputs.end());

    std::string pre_params = Join(fn.params, ", ");
    std::vector<std::string> post_param_list = {"old", "self", "result"};
    post_param_list.insert(post_param_list.end(), inputs.begin(), inputs.end());
    std::string post_params = Join(post_param_list, ", ");

    for (const auto& pred : op.pre_preds) {
      imports_.insert("pre");
      fn.decorators.push_back("pre(lambda " + pre_params + ": " +
                              RenderPythonExpr(*pred, ctx) + ", " +
                              Description(*pred) + ")");
    }
    PyContext post_ctx = ctx;
    post_ctx.old_receiver = "old";
    post_ctx.result_name = "result";
    post_ctx.multiple_outputs = schema.outputs.size() > 1;
    for (const auto& pred : op.post_preds) {
      imports_.insert("post");
      fn.decorators.push_back("post(lambda " + post_params + ": " +
                              RenderPythonExpr(*pred, post_ctx) + ", " +
                              Description(*pred) + ")");
    }
    if (options_.frame_checks) {
      for (const auto& var : op.frame_vars) {
        imports_.insert("post");
        std::string attr = AttributeName(cm, var, ctx);
        fn.decorators.push_back("post(lambda " + post_params + ": self." + attr +
                                " == old." + attr + ", " +
                                PythonString(var + "' = " + var) + ", frame=True)");
      }
    }

    for (const auto& in : schema.inputs) {
      std::string validator = ValidatorFor(in.type);
      if (!validator.empty()) {
        fn.body.push_back(in.name + " = " + validator + "(" + in.name + ")");
      }
    }
    for (const auto& o : schema.outputs) {
      auto it = std::find_if(op.output_bindings.begin(), op.output_bindings.end(),
                             [&](const auto& b) { return b.output == o.name; });
      fn.body.push_back(o.name + " = " +
                        (it == op.output_bindings.end()
                             ? std::string("None")
                             : RenderPythonExpr(*it->rhs, ctx)));
    }
    EmitAssignments(cm, op, ctx, fn.body);

    if (schema.outputs.size() == 1) {
      fn.body.push_back("return " + schema.outputs[0].name);
    } else if (schema.outputs.size() > 1) {
      std::vector<std::string> entries;
      for (const auto& o : schema.outputs) {
        entries.push_back(PythonString(o.name) + ": " + o.name);
      }
      fn.body.push_back("return {" + Join(entries, ", ") + "}");
    }

    std::vector<std::string> outputs;
    for (const auto& o : schema.outputs) outputs.push_back(o.name);
    fn.trailer.push_back(IoLine(fn.name, inputs, outputs));
    return fn;
  }

  void EmitAssignments(const sema::ClassModel& cm, const sema::ClassifiedOperation& op,
                       const PyContext& ctx, std::vector<std::string>& body) {
    const auto& assignments = op.body_assignments;
    bool simultaneous = false;
    for (size_t i = 0; i < assignments.size(); ++i) {
      for (size_t j = i + 1; j < assignments.size(); ++j) {
        simultaneous = simultaneous || ReadsName(*assignments[j].rhs, assignments[i].target);
      }
    }
    std::vector<std::string> targets;
    std::vector<std::string> values;
    for (const auto& a : assignments) {
      targets.push_back("self." + AttributeName(cm, a.target, ctx));
      values.push_back(Validated(cm.table.Find(a.target)->type,
                                 RenderPythonExpr(*a.rhs, ctx)));
    }
    if (simultaneous) {
      body.push_back(Join(targets, ", ") + " = " + Join(values, ", "));
      return;
    }
    for (size_t i = 0; i < targets.size(); ++i) {
      body.push_back(targets[i] + " = " + values[i]);
    }
  }

  GeneratedFunction EmitOpExpr(const sema::ClassModel& cm, const syntax::OpExprDef& def,
                               GeneratedClass& out) {
    PyContext ctx = BaseContext(cm);
    const sema::OpSignature& sig = cm.signatures.at(def.name);
    GeneratedFunction fn;
    fn.name = AttributeName(cm, def.name, ctx);
    fn.params = {"self"};
    fn.params.insert(fn.params.end(), sig.inputs.begin(), sig.inputs.end());
    std::string call = OpCall(cm, *def.expr, ctx);
    out.op_expr_bindings.push_back(OpExprBinding{def.name, call});
    std::vector<std::string> args;
    for (const auto& in : sig.inputs) args.push_back(in + "=" + in);
    fn.body.push_back("return " + call + "(" + Join(args, ", ") + ")");
    fn.trailer.push_back(IoLine(fn.name, sig.inputs, sig.outputs));
    return fn;
  }

  std::string OpCall(const sema::ClassModel& cm, const syntax::OpExpr& expr,
                     const PyContext& ctx) {
    if (const auto* ref = expr.As<syntax::OpRef>()) {
      return "self." + AttributeName(cm, ref->name, ctx);
    }
    if (const auto* member = expr.As<syntax::OpMemberRef>()) {
      std::string object = "self." + AttributeName(cm, member->object, ctx);
      std::optional<std::string> class_name = cm.table.ObjectClass(member->object);
      const sema::ClassModel* owner = class_name ? model_.FindClass(*class_name) : nullptr;
      return object + "." +
             (owner ? AttributeName(*owner, member->name, ctx) : member->name);
    }
    const auto& binary = std::get<syntax::OpBinary>(expr.node);
    std::string combinator;
    switch (binary.op) {
      case syntax::OpOperator::kChoice: combinator = "choice"; break;
      case syntax::OpOperator::kSequential: combinator = "sequential"; break;
      case syntax::OpOperator::kParallel: combinator = "parallel"; break;
      case syntax::OpOperator::kConjunction: combinator = "conjunction"; break;
    }
    imports_.insert(combinator);
    return combinator + "(" + OpCall(cm, *binary.lhs, ctx) + ", " +
           OpCall(cm, *binary.rhs, ctx) + ")";
  }

  static std::string IoLine(const std::string& name, const std::vector<std::string>& inputs,
                            const std::vector<std::string>& outputs) {
    return name + ".__oz_io__ = (" + PythonTuple(inputs) + ", " + PythonTuple(outputs) +
           ")";
  }

  static std::string Description(const syntax::Expr& pred) {
    return PythonString(syntax::PrettyPrintExpr(pred));
  }

  const sema::SemanticModel& model_;
  const CodegenOptions& options_;
  std::set<std::string> imports_;
};

}  // namespace

GeneratedModule EmitModule(const sema::SemanticModel& model, std::string_view source_name,
                           std::string_view source_text, const CodegenOptions& options) {
  return ModuleEmitter(model, options).Emit(source_name, source_text);
}

}  // namespace ozc::codegen
