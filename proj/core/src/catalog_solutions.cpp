#include <hydrosym/catalog.hpp>

namespace hydrosym {

// Exact-solution records for both systems. Every record is verified against
// the full PDE system at its tier. `erratum` notes record where mechanical
// verification disagrees with the printed source; those entries carry the
// corrected form plus the discrepancy note instead of a silent fix.
const char* Catalog::solutions_json() {
  return R"JSON({
  "records": [
    {"id": "as1", "algebra": "classical", "subalgebra": "L1", "tier": "symbolic",
     "fields": {"R": "C1", "S": "C2"}},

    {"id": "as2", "algebra": "classical", "subalgebra": "L2", "tier": "symbolic",
     "fields": {"R": "x*t^(-1)", "S": "x*t^(-1)"}},

    {"id": "as3", "algebra": "classical", "subalgebra": "L3", "tier": "numeric",
     "fields": {
       "R": "x/t + (C2/(2*t^2) - C1*x/(2*t)) * (1/4) * (C2 - C1*x*t + sqrt(C1^2*x^2*t^2 - 2*C1*C2*x*t + C2^2 + 16*x*t))",
       "S": "-(((4 - C1*C2)*x*t + C2^2)*sqrt(C1^2*x^2*t^2 - 2*C1*C2*x*t + C2^2 + 16*x*t) + (C1^2*C2 - 4*C1)*x^2*t^2 + (12*C2 - 2*C1*C2^2)*x*t + C2^3) * pow((-C1^2*x*t + C1*C2 - 4)*sqrt(C1^2*x^2*t^2 - 2*C1*C2*x*t + C2^2 + 16*x*t) + C1^3*x^2*t^2 + (12*C1 - 2*C1^2*C2)*x*t + C1*C2^2 - 4*C2, -1) / t^2"},
     "domain": ["C1^2*x^2*t^2 - 2*C1*C2*x*t + C2^2 + 16*x*t"],
     "erratum": "As printed the 1/4 factors multiply only the linear terms of the second bracket of R; verification requires the 1/4 to apply to the whole bracket including the radical, i.e. R = x/t + (C2/(2t^2) - C1 x/(2t)) * (1/4) * (C2 - C1 x t + sqrt(rad)). The printed S verifies unchanged."},

    {"id": "as4", "algebra": "classical", "subalgebra": "L4", "tier": "symbolic",
     "fields": {"R": "x*t^(-1) + C1*t + C2*t^(-1)",
                "S": "x*t^(-1) - C1*t + C2*t^(-1)"}},

    {"id": "as5", "algebra": "classical", "subalgebra": "L5", "tier": "modulo-ODE",
     "sigma": "x^2 + t^2",
     "fields": {
       "R": "(x*sin(F) - t*cos(F))*pow(x*cos(F) + t*sin(F), -1)",
       "S": "(x*sin(F) - t*pow(K0^2 - sin(F)^2, 1/2))*pow(x*pow(K0^2 - sin(F)^2, 1/2) + t*sin(F), -1)"},
     "field_args": {"F": ["sigma"]},
     "x_elim_power": 2, "x_elim": "sigma - t^2",
     "rewrites": [
       {"atom": "F_sigma", "power": 1,
        "value": "1/2*pow(K0^2 - sin(F)^2, 1/2)*sigma^(-1)*sin(F)^(-1)"},
       {"atom": "cos(F)", "power": 2, "value": "1 - sin(F)^2"}],
     "erratum": "The printed quadrature (1-sin(F)^2)*sqrt(K0^2-sin(F)^2)+sin(F)^2 = (C0*sigma+K0^2+1)/2 fails the reduced system; the quadrature sigma*(cos(F)+sqrt(K0^2-sin(F)^2))^2 = C0, whose implicit derivative is the F_sigma rule used here, verifies. The relation tan(G) = sin(F)/sqrt(K0^2-sin(F)^2) is as printed."},

    {"id": "as6", "algebra": "classical", "subalgebra": "L6", "tier": "modulo-ODE",
     "sigma": "x*t^(-(k+1)/(k-1))",
     "fields": {"R": "t^(2/(k-1))*F", "S": "t^(2/(k-1))*G"},
     "field_args": {"F": ["sigma"], "G": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma*t^((k+1)/(k-1))",
     "rewrites": [
       {"atom": "F_sigma", "power": 1,
        "value": "4/((k-1)*(k+1)*C1)*F^(-(k-3)/2)*pow(F - G, -1)"},
       {"atom": "G_sigma", "power": 1,
        "value": "-4*G*pow((k-1)*(2 - (k+1)*C1*F^((k-1)/2))*(F - G), -1)"},
       {"atom": "sigma", "power": 1,
        "value": "(k-1)/2*(C1*F^((k+1)/2) + (2/(k+1) - C1*F^((k-1)/2))*G)"}],
     "samples": [{"k": "3"}, {"k": "2"}, {"k": "-2"}],
     "erratum": "The printed quadrature (as6B paired with as6A) leaves a nonzero residual in the second reduced equation. The general L6-invariant solution is algebraic: C1*F^((k+1)/2) + C2*G^((k+1)/2) = 2*sigma/(k-1) with C1*F^((k-1)/2) + C2*G^((k-1)/2) = 2/(k+1); this record verifies via the implicit derivatives of those relations."},

    {"id": "as7a", "algebra": "classical", "subalgebra": "L7", "tier": "numeric",
     "fields": {"R": "C1*x*exp(C1*(t + C2))*pow(exp(C1*(t + C2)) - 1, -1)",
                "S": "C1*x*pow(exp(C1*(t + C2)) - 1, -1)"},
     "erratum": "The printed label (as7) is assigned to both this solution and the L8 solution; the catalog stores them as as7a and as7b."},

    {"id": "as7b", "algebra": "classical", "subalgebra": "L8", "tier": "numeric",
     "fields": {"R": "(exp(C1*(x + C2)) - 1)/(C1*t)",
                "S": "(1 - exp(-C1*(x + C2)))/(C1*t)"},
     "erratum": "Duplicate paper label (as7); see as7a."},

    {"id": "as9", "algebra": "classical", "subalgebra": "L9", "tier": "modulo-ODE",
     "sigma": "x*t^(-1) - eps*ln(t)",
     "fields": {"R": "F + eps*ln(t)",
                "S": "sigma + eps - eps*F_sigma^(-1) + eps*ln(t)"},
     "field_args": {"F": ["sigma"]},
     "x_elim_power": 1, "x_elim": "t*sigma + eps*t*ln(t)",
     "rewrites": [
       {"atom": "F_sigmasigma", "power": 1,
        "value": "-(F - sigma)*F_sigma^2*pow(eps*F - eps*sigma - 1, -1)"}],
     "samples": [{"eps": "1"}, {"eps": "-1"}]},

    {"id": "as10", "algebra": "classical", "subalgebra": "L10", "tier": "modulo-ODE",
     "sigma": "pow(x^2 + t^2, 1/2)*exp(k*arctan(t*x^(-1)))",
     "sigma_grad": {"x": "sigma*(x - k*t)*pow(x^2 + t^2, -1)",
                    "t": "sigma*(t + k*x)*pow(x^2 + t^2, -1)"},
     "fields": {
       "R": "(x*F - t)*pow(x + t*F, -1)",
       "S": "(x*(1 + F^2 - k*sigma*F_sigma) - t*sigma*F_sigma)*pow(x*sigma*F_sigma + t*(1 + F^2 - k*sigma*F_sigma), -1)"},
     "field_args": {"F": ["sigma"]},
     "rewrites": [
       {"atom": "F_sigmasigma", "power": 1,
        "value": "(sigma^2*(2*k*F + 2*F^2 - k^2 - 1)*F_sigma^2 + sigma*(k - F)*(1 + F^2)*F_sigma - (1 + F^2)^2)*pow(sigma^2*(k + F)*(1 + F^2), -1)"}],
     "samples": [{"k": "1"}, {"k": "2"}, {"k": "-2"}]},

    {"id": "as11", "algebra": "classical", "subalgebra": "L11", "tier": "symbolic",
     "fields": {"R": "x*pow(t + eps, -1) + C1*(t + eps) + C2*pow(t + eps, -1)",
                "S": "x*pow(t + eps, -1) - C1*(t + eps) + C2*pow(t + eps, -1)"}},

    {"id": "as12", "algebra": "classical", "subalgebra": "L12", "tier": "modulo-ODE",
     "sigma": "x*exp(-2*eps*t)",
     "fields": {"R": "x*F",
                "S": "x*2*eps*sigma*F_sigma*pow(F + sigma*F_sigma, -1)"},
     "field_args": {"F": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma*exp(2*eps*t)",
     "rewrites": [
       {"atom": "F_sigmasigma", "power": 1,
        "value": "-(2*sigma*F_sigma^2 + 2*F*(eps*F - 1)*F_sigma)*pow(sigma*F*(eps*F - 2), -1)"}],
     "samples": [{"eps": "1"}, {"eps": "-1"}]},

    {"id": "as13", "algebra": "classical", "subalgebra": "L13", "tier": "modulo-ODE",
     "sigma": "t*exp(2*eps*x)",
     "sigma_grad": {"x": "2*eps*sigma", "t": "sigma*t^(-1)"},
     "fields": {"R": "t^(-1)*F",
                "S": "t^(-1)*1/2*eps*(F*pow(sigma*F_sigma, -1) - 1)"},
     "field_args": {"F": ["sigma"]},
     "rewrites": [
       {"atom": "F_sigmasigma", "power": 1,
        "value": "(2*sigma*(1 + eps*F)*F_sigma^2 - 2*F*(1 + eps*F)*F_sigma)*pow(sigma*F*(1 + 2*eps*F), -1)"}],
     "samples": [{"eps": "1"}, {"eps": "-1"}]},

    {"id": "solution1", "algebra": "susy", "subalgebra": "SL1", "tier": "symbolic",
     "fields": {"R": "C1", "S": "C2", "xi": "D1_", "psi": "D2_"}},

    {"id": "solution2B", "algebra": "susy", "subalgebra": "SL2", "tier": "symbolic",
     "fields": {"R": "0", "S": "G", "xi": "D1_", "psi": "Omega"},
     "field_args": {"G": ["x"], "Omega": ["x"]}},

    {"id": "solution2C", "algebra": "susy", "subalgebra": "SL2", "tier": "symbolic",
     "fields": {"R": "F", "S": "0", "xi": "Lambda", "psi": "D1_"},
     "field_args": {"F": ["x"], "Lambda": ["x"]}},

    {"id": "solution2D", "algebra": "susy", "subalgebra": "SL2", "tier": "symbolic",
     "fields": {"R": "0", "S": "0", "xi": "Lambda", "psi": "Omega"},
     "field_args": {"Lambda": ["x"], "Omega": ["x"]},
     "constraints": [{"type": "odd_pair_zero", "args": ["Lambda_x", "Omega_x"]}]},

    {"id": "solution3", "algebra": "susy", "subalgebra": "SL3", "tier": "symbolic",
     "fields": {"R": "x*t^(-1) + C1*t + C2*t^(-1)",
                "S": "x*t^(-1) - C1*t + C2*t^(-1)",
                "xi": "D1_", "psi": "D2_"}},

    {"id": "solution4", "algebra": "susy", "subalgebra": "SL4", "tier": "modulo-ODE",
     "sigma": "x^3*t^(-2)",
     "fields": {"R": "t^(-1/3)*F",
                "S": "t^(-1/3)*(1/9*F*sigma^(-2/3)*F_sigma^(-1) + 2/3*sigma^(1/3))",
                "xi": "D1_", "psi": "D2_"},
     "field_args": {"F": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma^(1/3)*t^(2/3)",
     "rewrites": [
       {"atom": "F_sigmasigma", "power": 1,
        "value": "-((9*sigma*F - 8*sigma^(4/3))*F_sigma^2 + (sigma^(1/3)*F - 2*F^2)*F_sigma)*pow(2*sigma^(4/3)*F - 3*sigma*F^2, -1)"}]},

    {"id": "solution5A", "algebra": "susy", "subalgebra": "SL5", "tier": "symbolic",
     "sigma": "x*t^(-1)",
     "fields": {"R": "x*t^(-1)", "S": "x*t^(-1)", "xi": "0", "psi": "Omega"},
     "field_args": {"Omega": ["sigma"]}},

    {"id": "solution5B", "algebra": "susy", "subalgebra": "SL5", "tier": "symbolic",
     "fields": {"R": "C1", "S": "C0", "xi": "K_*(x - C0*t)", "psi": "D1_"},
     "erratum": "The prose leaves R, S, psi as unconstrained constants; the xi equation forces S = C0 (the wave speed), which this record imposes."},

    {"id": "solution6A", "algebra": "susy", "subalgebra": "SL6", "tier": "symbolic",
     "sigma": "x*t^(-1)",
     "fields": {"R": "x*t^(-1)", "S": "x*t^(-1)", "xi": "Lambda", "psi": "0"},
     "field_args": {"Lambda": ["sigma"]}},

    {"id": "solution6B", "algebra": "susy", "subalgebra": "SL6", "tier": "symbolic",
     "fields": {"R": "C0", "S": "C1", "xi": "D1_", "psi": "K_*(x - C0*t)"},
     "erratum": "Mirror of solution5B: the psi equation forces R = C0."},

    {"id": "solution7A", "algebra": "susy", "subalgebra": "SL7", "tier": "symbolic",
     "fields": {
       "R": "(1+2*a)/(1+3*a)*x*t^(-1)",
       "S": "(1+2*a)/(1+a)*x*t^(-1)",
       "xi": "K0_*t^(1/(2*a))*x^(-(1+a)/(2*a*(1+2*a)))",
       "psi": "4*a^3*(1+2*a)^3/((1+3*a)*(1+a)^2*(12*a^3 - 2*a^2 - 5*a - 1))*L0_*x^((1+3*a)*(1+4*a)/(2*a*(1+2*a)))*t^(-(1+4*a)/(2*a)) + D1_"},
     "constraints": [{"type": "product_value", "args": ["L0_", "K0_"],
                      "value": "(12*a^3 - 2*a^2 - 5*a - 1)/((1+3*a)*(1+4*a))"}],
     "samples": [{"a": "1"}, {"a": "2"}, {"a": "-2"}],
     "erratum": "Printed as xi = K0 = t^(1/2a) x^(...); the '=' is read as multiplication. The printed side condition K0*L0 = 0 contradicts the bosonic equations, which force L0*K0 = (12a^3-2a^2-5a-1)/((1+3a)(1+4a)); the record imposes the verified relation."},

    {"id": "solution7E", "algebra": "susy", "subalgebra": "SL7", "tier": "numeric",
     "fields": {"R": "(exp(C1*(x + C2)) - 1)/(C1*t)",
                "S": "(1 - exp(-C1*(x + C2)))/(C1*t)",
                "xi": "K0_*(1 - exp(C1*(x + C2)))^2*t^(-2)",
                "psi": "K1_"},
     "erratum": "Printed with R, S proportional to t and xi without the t^(-2) factor; the change of variable (a = -1/2 row) requires R, S ~ 1/t and xi ~ t^(-2), which verifies."},

    {"id": "solution7I", "algebra": "susy", "subalgebra": "SL7", "tier": "numeric",
     "fields": {"R": "C0*x*exp(-C0*(t - t0))*pow(1 - exp(-C0*(t - t0)), -1)",
                "S": "C0*x*pow(1 - exp(-C0*(t - t0)), -1)",
                "xi": "K0_*x^3*exp(-3*C0*(t - t0))*pow(exp(-C0*(t - t0)) - 1, -3)",
                "psi": "K1_"},
     "numeric_fixed": {"t0": "-1"}},

    {"id": "solution8A", "algebra": "susy", "subalgebra": "SL8", "tier": "symbolic",
     "fields": {
       "R": "(1+2*a)/(1+a)*x*t^(-1)",
       "S": "(1+2*a)/(1+3*a)*x*t^(-1)",
       "xi": "4*a^3*(1+2*a)^3/((1+3*a)*(1+a)^2*(12*a^3 - 2*a^2 - 5*a - 1))*K0_*x^((1+3*a)*(1+4*a)/(2*a*(1+2*a)))*t^(-(1+4*a)/(2*a)) + D1_",
       "psi": "L0_*t^(1/(2*a))*x^(-(1+a)/(2*a*(1+2*a)))"},
     "constraints": [{"type": "product_value", "args": ["L0_", "K0_"],
                      "value": "-(12*a^3 - 2*a^2 - 5*a - 1)/((1+3*a)*(1+4*a))"}],
     "samples": [{"a": "1"}, {"a": "2"}, {"a": "-2"}],
     "erratum": "Mirror of solution7A; the printed L0*K0 = 0 is replaced by the verified nonzero relation."},

    {"id": "solution8E", "algebra": "susy", "subalgebra": "SL8", "tier": "numeric",
     "fields": {"R": "(1 - exp(-C1*(x + C2)))/(C1*t)",
                "S": "(exp(C1*(x + C2)) - 1)/(C1*t)",
                "xi": "K0_",
                "psi": "K1_*(1 - exp(C1*(x + C2)))^2*t^(-2)"},
     "erratum": "Same t-placement corrections as solution7E."},

    {"id": "solution8I", "algebra": "susy", "subalgebra": "SL8", "tier": "numeric",
     "fields": {"R": "C0*x*pow(1 - exp(-C0*(t - t0)), -1)",
                "S": "C0*x*exp(-C0*(t - t0))*pow(1 - exp(-C0*(t - t0)), -1)",
                "xi": "K0_",
                "psi": "K1_*x^3*exp(-3*C0*(t - t0))*pow(exp(-C0*(t - t0)) - 1, -3)"},
     "numeric_fixed": {"t0": "-1"}},

    {"id": "solution9", "algebra": "susy", "subalgebra": "SL9", "tier": "symbolic",
     "fields": {"R": "2*(a+1)/(a+3)*x*t^(-1)",
                "S": "2*(a+1)/(3*a+1)*x*t^(-1)",
                "xi": "K0_*x^(-a*(1+3*a)/(1-a^2))*t^(2*a/(1-a))",
                "psi": "L0_*x^((a+3)/(1-a^2))*t^(2/(a-1))"},
     "constraints": [{"type": "product_value", "args": ["L0_", "K0_"],
                      "value": "2*(1-a^2)^3/(a*(1+3*a)^2*(a+3)^2)"}],
     "samples": [{"a": "2"}, {"a": "3"}, {"a": "1/2"}],
     "erratum": "No relation between K0 and L0 is printed; the bosonic equations force L0*K0 = 2(1-a^2)^3/(a(1+3a)^2(a+3)^2), which the record imposes."},

    {"id": "solution10", "algebra": "susy", "subalgebra": "SL10", "tier": "symbolic",
     "fields": {}, "special": "sl10_monomial"},

    {"id": "solution11", "algebra": "susy", "subalgebra": "SL11", "tier": "symbolic",
     "fields": {"R": "x*t^(-1) + eps", "S": "x*t^(-1) - eps",
                "xi": "K_*t^(1/2)*exp(1/2*eps*x*t^(-1))",
                "psi": "L_*t^(1/2)*exp(-1/2*eps*x*t^(-1))"},
     "constraints": [{"type": "product_value", "args": ["L_", "K_"], "value": "-4*eps"}],
     "samples": [{"eps": "1"}, {"eps": "-1"}],
     "erratum": "K and L are printed as free constants; the bosonic equations force L*K = -4*eps."},

    {"id": "solution12", "algebra": "susy", "subalgebra": "SL12", "tier": "symbolic",
     "fields": {"R": "x*t^(-1) - eps", "S": "x*t^(-1) + eps",
                "xi": "K_*t^(1/2)*exp(-1/2*eps*x*t^(-1))",
                "psi": "L_*t^(1/2)*exp(1/2*eps*x*t^(-1))"},
     "constraints": [{"type": "product_value", "args": ["L_", "K_"], "value": "4*eps"}],
     "samples": [{"eps": "1"}, {"eps": "-1"}],
     "erratum": "Forced relation L*K = 4*eps, as for solution11."},

    {"id": "solution13", "algebra": "susy", "subalgebra": "SL13", "tier": "symbolic",
     "fields": {"R": "x*t^(-1) - 1/2*eps", "S": "x*t^(-1) + 1/2*eps",
                "xi": "K_*t^(1/2)*exp(-eps*x*t^(-1))",
                "psi": "L_*t^(1/2)*exp(eps*x*t^(-1))"},
     "constraints": [{"type": "product_value", "args": ["L_", "K_"], "value": "1/2*eps"}],
     "samples": [{"eps": "1"}, {"eps": "-1"}],
     "erratum": "Forced relation L*K = eps/2, as for solution11."},

    {"id": "solution14", "algebra": "susy", "subalgebra": "SL14", "tier": "numeric",
     "fields": {"R": "sqrt(C1*(x - 1/2*eps*t^2) + C2) + eps*t",
                "S": "-2*eps/C1*sqrt(C1*(x - 1/2*eps*t^2) + C2) + eps*t",
                "xi": "D1_", "psi": "D2_"},
     "numeric_fixed": {"C2": "5"},
     "domain": ["C1*(x - 1/2*eps*t^2) + C2"],
     "samples": [{"eps": "1"}, {"eps": "-1"}]},

    {"id": "solution18", "algebra": "susy", "subalgebra": "SL18", "tier": "symbolic",
     "fields": {"R": "eta1*eta2*t + D1_",
                "S": "-eta1*eta2*t + D2_",
                "xi": "eta1*x + eta1*D2_*t + D3_",
                "psi": "eta2*x + eta2*D1_*t + D4_"}},

    {"id": "solution20", "algebra": "susy", "subalgebra": "SL20", "tier": "symbolic",
     "fields": {"R": "x*t^(-1) + C1*t + (C2 - eta1*eta2)/(2*t)",
                "S": "x*t^(-1) - C1*t + (C2 + eta1*eta2)/(2*t)",
                "xi": "eta1*(C1*t + C2/(2*t) + x*t^(-1))",
                "psi": "eta2*(-C1*t + C2/(2*t) + x*t^(-1))"}},

    {"id": "solution22", "algebra": "susy", "subalgebra": "SL22", "tier": "symbolic",
     "fields": {"R": "C1", "S": "C2",
                "xi": "eta2*(x - C2*t)", "psi": "eta2*ln(x - C1*t)"}},

    {"id": "solution23", "algebra": "susy", "subalgebra": "SL23", "tier": "symbolic",
     "fields": {"R": "C1", "S": "C2",
                "xi": "eta1*ln(x - C2*t)", "psi": "eta1*(x - C1*t)"}},

    {"id": "solution24D", "algebra": "susy", "subalgebra": "SL24", "tier": "numeric",
     "fields": {"R": "(exp(C1*(x + C2)) - 1)/(C1*t)",
                "S": "-(exp(-C1*(x + C2)) - 1)/(C1*t)",
                "xi": "eta2*(1 - exp(C1*(x + C2)))^2*t^(-2)",
                "psi": "2*eta2*ln((1 - exp(-C1*(x + C2)))/t)"},
     "domain": ["1 - exp(-C1*(x + C2))"]},

    {"id": "solution25", "algebra": "susy", "subalgebra": "SL25", "tier": "numeric",
     "fields": {"R": "-(exp(-C1*(x + C2)) - 1)/(C1*t)",
                "S": "(exp(C1*(x + C2)) - 1)/(C1*t)",
                "xi": "2*eta1*ln((1 - exp(-C1*(x + C2)))/t)",
                "psi": "eta1*(1 - exp(C1*(x + C2)))^2*t^(-2)"},
     "domain": ["1 - exp(-C1*(x + C2))"]},

    {"id": "solution26", "algebra": "susy", "subalgebra": "SL26", "tier": "symbolic",
     "fields": {"R": "x*t^(-1)", "S": "x*t^(-1)",
                "xi": "0", "psi": "eps*eta2*x*t^(-1)"}},

    {"id": "solution27", "algebra": "susy", "subalgebra": "SL27", "tier": "symbolic",
     "fields": {"R": "x*t^(-1)", "S": "x*t^(-1)",
                "xi": "eps*eta1*x*t^(-1)", "psi": "0"},
     "erratum": "Stated in prose as the mirror of solution26 without a printed formula; this record is the xi/psi mirror."},

    {"id": "solution28", "algebra": "susy", "subalgebra": "SL28", "tier": "numeric",
     "fields": {
       "R": "C1*sqrt(2*eps*x - t^2 - C0)*(1 - eps*eta1*eta2/(2*(2*eps*x - t^2 - C0))) + eps*t",
       "S": "-1/C1*sqrt(2*eps*x - t^2 - C0)*(1 + eps*eta1*eta2/(2*(2*eps*x - t^2 - C0))) + eps*t",
       "xi": "C1*eta1*sqrt(2*eps*x - t^2 - C0) + eta1*eps*t + D1_",
       "psi": "-1/C1*eta2*sqrt(2*eps*x - t^2 - C0) + eta2*eps*t + D2_"},
     "numeric_fixed": {"C0": "-9"},
     "domain": ["2*eps*x - t^2 - C0"],
     "samples": [{"eps": "1"}, {"eps": "-1"}]}
  ]
})JSON";
}

}  // namespace hydrosym
