#include "srees/instance.hpp"

namespace srees {

Instance build_instance(const PresentationData& input) {
    Instance inst;
    inst.input = input;
    inst.input_report = validate(input);
    if (!inst.input_report.ok) throw ValidationFailure(inst.input_report);

    PresentationData in = input;
    in.n = inst.input_report.n;
    in.d = inst.input_report.d;

    inst.cf = canonicalize(linear_part(in));
    inst.pd = to_scroll_coordinates(in, inst.cf);
    ValidationReport canon_report = validate(inst.pd);
    if (!canon_report.ok)
        throw ValidationFailure(canon_report);
    inst.delta = canon_report.delta;
    inst.st = build_scroll(inst.cf, in.m, in.n, in.ring.field);
    inst.rg = rees_ideal(inst.st, extract_c(inst.pd, inst.st));
    inst.spg = symbolic_power_generators(inst.st, in.n);
    return inst;
}

}  // namespace srees
