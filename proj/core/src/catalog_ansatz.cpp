#include <hydrosym/catalog.hpp>

namespace hydrosym {

// Invariants, changes of variable and reduced equations for every
// one-dimensional subalgebra. Dependent functions are written F, G (bosonic)
// and Lambda, Omega (fermionic) uniformly; rows whose symmetry variable is a
// bare independent variable use that variable directly as the function
// argument. x_elim rewrites x^power by the replacement so residuals land in
// the symmetry variable.
const char* Catalog::ansatz_json() {
  return R"JSON({
  "rows": [
    {"label": "L1", "algebra": "classical", "sigma": "t",
     "invariants": ["R", "S"],
     "fields": {"R": "F", "S": "G"},
     "field_args": {"F": ["t"], "G": ["t"]},
     "reduced": ["F_t", "G_t"]},

    {"label": "L2", "algebra": "classical", "sigma": "x*t^(-1)",
     "invariants": ["R", "S"],
     "fields": {"R": "F", "S": "G"},
     "field_args": {"F": ["sigma"], "G": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma*t",
     "reduced": ["-sigma*F_sigma + G*F_sigma", "-sigma*G_sigma + F*G_sigma"]},

    {"label": "L3", "algebra": "classical", "sigma": "x*t",
     "invariants": ["t^2*R", "t^2*S"],
     "fields": {"R": "t^(-2)*F", "S": "t^(-2)*G"},
     "field_args": {"F": ["sigma"], "G": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma*t^(-1)",
     "reduced": ["-2*F + sigma*F_sigma + G*F_sigma",
                 "-2*G + sigma*G_sigma + F*G_sigma"]},

    {"label": "L4", "algebra": "classical", "sigma": "t",
     "invariants": ["R - x*t^(-1)", "S - x*t^(-1)"],
     "fields": {"R": "F + x*t^(-1)", "S": "G + x*t^(-1)"},
     "field_args": {"F": ["t"], "G": ["t"]},
     "reduced": ["F_t + t^(-1)*G", "G_t + t^(-1)*F"]},

    {"label": "L5", "algebra": "classical", "sigma": "x^2 + t^2",
     "invariants": ["arctan(R) + arctan(t*x^(-1))", "arctan(S) + arctan(t*x^(-1))"],
     "fields": {"R": "(x*tan(F) - t)*pow(x + t*tan(F), -1)",
                "S": "(x*tan(G) - t)*pow(x + t*tan(G), -1)"},
     "field_args": {"F": ["sigma"], "G": ["sigma"]},
     "x_elim_power": 2, "x_elim": "sigma - t^2",
     "reduced": ["-1 - tan(F)^2 + 2*sigma*tan(G)*F_sigma + 2*sigma*tan(G)*tan(F)^2*F_sigma",
                 "-1 - tan(G)^2 + 2*sigma*tan(F)*G_sigma + 2*sigma*tan(F)*tan(G)^2*G_sigma"]},

    {"label": "L6", "algebra": "classical", "sigma": "x*t^(-(k+1)/(k-1))",
     "invariants": ["t^(-2/(k-1))*R", "t^(-2/(k-1))*S"],
     "fields": {"R": "t^(2/(k-1))*F", "S": "t^(2/(k-1))*G"},
     "field_args": {"F": ["sigma"], "G": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma*t^((k+1)/(k-1))",
     "reduced": ["2/(k-1)*F - (k+1)/(k-1)*sigma*F_sigma + G*F_sigma",
                 "2/(k-1)*G - (k+1)/(k-1)*sigma*G_sigma + F*G_sigma"],
     "samples": [{"k": "2"}, {"k": "3"}, {"k": "-2"}, {"k": "1/2"}]},

    {"label": "L7", "algebra": "classical", "sigma": "t",
     "invariants": ["x^(-1)*R", "x^(-1)*S"],
     "fields": {"R": "x*F", "S": "x*G"},
     "field_args": {"F": ["t"], "G": ["t"]},
     "reduced": ["F_t + G*F", "G_t + F*G"]},

    {"label": "L8", "algebra": "classical", "sigma": "x",
     "invariants": ["t*R", "t*S"],
     "fields": {"R": "t^(-1)*F", "S": "t^(-1)*G"},
     "field_args": {"F": ["x"], "G": ["x"]},
     "reduced": ["-F + G*F_x", "-G + F*G_x"]},

    {"label": "L9", "algebra": "classical", "sigma": "x*t^(-1) - eps*ln(t)",
     "invariants": ["R - eps*ln(t)", "S - eps*ln(t)"],
     "fields": {"R": "F + eps*ln(t)", "S": "G + eps*ln(t)"},
     "field_args": {"F": ["sigma"], "G": ["sigma"]},
     "x_elim_power": 1, "x_elim": "t*sigma + eps*t*ln(t)",
     "reduced": ["-sigma*F_sigma - eps*F_sigma + G*F_sigma + eps",
                 "-sigma*G_sigma - eps*G_sigma + F*G_sigma + eps"],
     "samples": [{"eps": "1"}, {"eps": "-1"}]},

    {"label": "L10", "algebra": "classical",
     "sigma": "pow(x^2 + t^2, 1/2)*exp(k*arctan(t*x^(-1)))",
     "invariants": ["arctan(R) + arctan(t*x^(-1))", "arctan(S) + arctan(t*x^(-1))"],
     "fields": {"R": "(x*tan(F) - t)*pow(x + t*tan(F), -1)",
                "S": "(x*tan(G) - t)*pow(x + t*tan(G), -1)"},
     "field_args": {"F": ["sigma"], "G": ["sigma"]},
     "sigma_grad": {"x": "sigma*(x - k*t)*pow(x^2 + t^2, -1)",
                    "t": "sigma*(t + k*x)*pow(x^2 + t^2, -1)"},
     "reduced": ["k*sigma*F_sigma + k*sigma*tan(F)^2*F_sigma + sigma*tan(G)*F_sigma + sigma*tan(G)*tan(F)^2*F_sigma - tan(F)^2 - 1",
                 "k*sigma*G_sigma + k*sigma*tan(G)^2*G_sigma + sigma*tan(F)*G_sigma + sigma*tan(F)*tan(G)^2*G_sigma - tan(G)^2 - 1"],
     "samples": [{"k": "1"}, {"k": "2"}, {"k": "-1"}]},

    {"label": "L11", "algebra": "classical", "sigma": "t",
     "invariants": ["R - x*pow(t + eps, -1)", "S - x*pow(t + eps, -1)"],
     "fields": {"R": "F + x*pow(t + eps, -1)", "S": "G + x*pow(t + eps, -1)"},
     "field_args": {"F": ["t"], "G": ["t"]},
     "reduced": ["F_t + pow(t + eps, -1)*G", "G_t + pow(t + eps, -1)*F"],
     "samples": [{"eps": "1"}, {"eps": "-1"}]},

    {"label": "L12", "algebra": "classical", "sigma": "x*exp(-2*eps*t)",
     "invariants": ["x^(-1)*R", "x^(-1)*S"],
     "fields": {"R": "x*F", "S": "x*G"},
     "field_args": {"F": ["sigma"], "G": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma*exp(2*eps*t)",
     "reduced": ["-2*eps*sigma*F_sigma + G*F + sigma*G*F_sigma",
                 "-2*eps*sigma*G_sigma + F*G + sigma*F*G_sigma"],
     "samples": [{"eps": "1"}, {"eps": "-1"}]},

    {"label": "L13", "algebra": "classical", "sigma": "t*exp(2*eps*x)",
     "invariants": ["t*R", "t*S"],
     "fields": {"R": "t^(-1)*F", "S": "t^(-1)*G"},
     "field_args": {"F": ["sigma"], "G": ["sigma"]},
     "sigma_grad": {"x": "2*eps*sigma", "t": "sigma*t^(-1)"},
     "reduced": ["-F + sigma*F_sigma + 2*eps*sigma*G*F_sigma",
                 "-G + sigma*G_sigma + 2*eps*sigma*F*G_sigma"],
     "samples": [{"eps": "1"}, {"eps": "-1"}]},

    {"label": "SL1", "algebra": "susy", "sigma": "t",
     "invariants": ["R", "S", "xi", "psi"],
     "fields": {"R": "F", "S": "G", "xi": "Lambda", "psi": "Omega"},
     "field_args": {"F": ["t"], "G": ["t"], "Lambda": ["t"], "Omega": ["t"]},
     "reduced": ["F_t", "G_t", "Lambda_t", "Omega_t"]},

    {"label": "SL2", "algebra": "susy", "sigma": "x",
     "invariants": ["R", "S", "xi", "psi"],
     "fields": {"R": "F", "S": "G", "xi": "Lambda", "psi": "Omega"},
     "field_args": {"F": ["x"], "G": ["x"], "Lambda": ["x"], "Omega": ["x"]},
     "reduced": ["G*F_x + Omega_x*Lambda_x", "F*G_x + Lambda_x*Omega_x",
                 "G*Lambda_x", "F*Omega_x"]},

    {"label": "SL3", "algebra": "susy", "sigma": "t",
     "invariants": ["R - x*t^(-1)", "S - x*t^(-1)", "xi", "psi"],
     "fields": {"R": "F + x*t^(-1)", "S": "G + x*t^(-1)", "xi": "Lambda", "psi": "Omega"},
     "field_args": {"F": ["t"], "G": ["t"], "Lambda": ["t"], "Omega": ["t"]},
     "reduced": ["F_t + t^(-1)*G", "G_t + t^(-1)*F", "Lambda_t", "Omega_t"]},

    {"label": "SL4", "algebra": "susy", "sigma": "x^3*t^(-2)",
     "invariants": ["t^(1/3)*R", "t^(1/3)*S", "xi", "psi"],
     "fields": {"R": "t^(-1/3)*F", "S": "t^(-1/3)*G", "xi": "Lambda", "psi": "Omega"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma^(1/3)*t^(2/3)",
     "reduced": ["-1/3*F - 2*sigma*F_sigma + 3*sigma^(2/3)*G*F_sigma + 9*sigma^(4/3)*Omega_sigma*Lambda_sigma",
                 "-1/3*G - 2*sigma*G_sigma + 3*sigma^(2/3)*F*G_sigma + 9*sigma^(4/3)*Lambda_sigma*Omega_sigma",
                 "-2*sigma*Lambda_sigma + 3*sigma^(2/3)*G*Lambda_sigma",
                 "-2*sigma*Omega_sigma + 3*sigma^(2/3)*F*Omega_sigma"]},

    {"label": "SL5", "algebra": "susy", "sigma": "x*t^(-1)",
     "invariants": ["R", "S", "t^(-1)*xi", "psi"],
     "fields": {"R": "F", "S": "G", "xi": "t*Lambda", "psi": "Omega"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma*t",
     "reduced": ["-sigma*F_sigma + G*F_sigma + Omega_sigma*Lambda_sigma",
                 "-sigma*G_sigma + F*G_sigma + Lambda_sigma*Omega_sigma",
                 "Lambda - sigma*Lambda_sigma + G*Lambda_sigma",
                 "-sigma*Omega_sigma + F*Omega_sigma"]},

    {"label": "SL6", "algebra": "susy", "sigma": "x*t^(-1)",
     "invariants": ["R", "S", "xi", "t^(-1)*psi"],
     "fields": {"R": "F", "S": "G", "xi": "Lambda", "psi": "t*Omega"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma*t",
     "reduced": ["-sigma*F_sigma + G*F_sigma + Omega_sigma*Lambda_sigma",
                 "-sigma*G_sigma + F*G_sigma + Lambda_sigma*Omega_sigma",
                 "-sigma*Lambda_sigma + G*Lambda_sigma",
                 "Omega - sigma*Omega_sigma + F*Omega_sigma"],
     "erratum": "Table V prints the change of variable as psi = t*Omega(t); the reduction requires psi = t*Omega(sigma), which is what this row uses."},

    {"label": "SL7", "algebra": "susy", "sigma": "x^(1+3*a)*t^(-(1+2*a))",
     "invariants": ["t^(a/(1+3*a))*R", "t^(a/(1+3*a))*S", "t^(-1/(1+3*a))*xi", "psi"],
     "fields": {"R": "t^(-a/(1+3*a))*F", "S": "t^(-a/(1+3*a))*G",
                "xi": "t^(1/(1+3*a))*Lambda", "psi": "Omega"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma^(1/(1+3*a))*t^((1+2*a)/(1+3*a))",
     "reduced": ["-a/(1+3*a)*F - (1+2*a)*sigma*F_sigma + (1+3*a)*sigma^(3*a/(1+3*a))*G*F_sigma + (1+3*a)^2*sigma^(6*a/(1+3*a))*Omega_sigma*Lambda_sigma",
                 "-a/(1+3*a)*G - (1+2*a)*sigma*G_sigma + (1+3*a)*sigma^(3*a/(1+3*a))*F*G_sigma + (1+3*a)^2*sigma^(6*a/(1+3*a))*Lambda_sigma*Omega_sigma",
                 "1/(1+3*a)*Lambda - (1+2*a)*sigma*Lambda_sigma + (1+3*a)*sigma^(3*a/(1+3*a))*G*Lambda_sigma",
                 "-(1+2*a)*sigma*Omega_sigma + (1+3*a)*sigma^(3*a/(1+3*a))*F*Omega_sigma"],
     "samples": [{"a": "1"}, {"a": "2"}, {"a": "-2"}]},

    {"label": "SL8", "algebra": "susy", "sigma": "x^(1+3*a)*t^(-(1+2*a))",
     "invariants": ["t^(a/(1+3*a))*R", "t^(a/(1+3*a))*S", "xi", "t^(-1/(1+3*a))*psi"],
     "fields": {"R": "t^(-a/(1+3*a))*F", "S": "t^(-a/(1+3*a))*G",
                "xi": "Lambda", "psi": "t^(1/(1+3*a))*Omega"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma^(1/(1+3*a))*t^((1+2*a)/(1+3*a))",
     "reduced": ["-a/(1+3*a)*F - (1+2*a)*sigma*F_sigma + (1+3*a)*sigma^(3*a/(1+3*a))*G*F_sigma + (1+3*a)^2*sigma^(6*a/(1+3*a))*Omega_sigma*Lambda_sigma",
                 "-a/(1+3*a)*G - (1+2*a)*sigma*G_sigma + (1+3*a)*sigma^(3*a/(1+3*a))*F*G_sigma + (1+3*a)^2*sigma^(6*a/(1+3*a))*Lambda_sigma*Omega_sigma",
                 "-(1+2*a)*sigma*Lambda_sigma + (1+3*a)*sigma^(3*a/(1+3*a))*G*Lambda_sigma",
                 "1/(1+3*a)*Omega - (1+2*a)*sigma*Omega_sigma + (1+3*a)*sigma^(3*a/(1+3*a))*F*Omega_sigma"],
     "samples": [{"a": "1"}, {"a": "2"}, {"a": "-2"}]},

    {"label": "SL9", "algebra": "susy", "sigma": "x*t^(-1)",
     "invariants": ["R", "S", "t^(-a/(1+a))*xi", "t^(-1/(1+a))*psi"],
     "fields": {"R": "F", "S": "G", "xi": "t^(a/(1+a))*Lambda", "psi": "t^(1/(1+a))*Omega"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma*t",
     "reduced": ["-sigma*F_sigma + G*F_sigma + Omega_sigma*Lambda_sigma",
                 "-sigma*G_sigma + F*G_sigma + Lambda_sigma*Omega_sigma",
                 "a/(1+a)*Lambda - sigma*Lambda_sigma + G*Lambda_sigma",
                 "1/(1+a)*Omega - sigma*Omega_sigma + F*Omega_sigma"],
     "samples": [{"a": "1"}, {"a": "2"}, {"a": "-3"}]},

    {"label": "SL10", "algebra": "susy", "sigma": "x^((1+a+3*b)/(1+a+2*b))*t^(-1)",
     "invariants": ["t^(b/(1+a+3*b))*R", "t^(b/(1+a+3*b))*S",
                    "t^(-a/(1+a+3*b))*xi", "t^(-1/(1+a+3*b))*psi"],
     "fields": {"R": "t^(-b/(1+a+3*b))*F", "S": "t^(-b/(1+a+3*b))*G",
                "xi": "t^(a/(1+a+3*b))*Lambda", "psi": "t^(1/(1+a+3*b))*Omega"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma^((1+a+2*b)/(1+a+3*b))*t^((1+a+2*b)/(1+a+3*b))",
     "reduced": ["-b/(1+a+3*b)*F - sigma*F_sigma + (1+a+3*b)/(1+a+2*b)*sigma^(b/(1+a+3*b))*G*F_sigma + ((1+a+3*b)/(1+a+2*b))^2*sigma^(2*b/(1+a+3*b))*Omega_sigma*Lambda_sigma",
                 "-b/(1+a+3*b)*G - sigma*G_sigma + (1+a+3*b)/(1+a+2*b)*sigma^(b/(1+a+3*b))*F*G_sigma + ((1+a+3*b)/(1+a+2*b))^2*sigma^(2*b/(1+a+3*b))*Lambda_sigma*Omega_sigma",
                 "a/(1+a+3*b)*Lambda - sigma*Lambda_sigma + (1+a+3*b)/(1+a+2*b)*sigma^(b/(1+a+3*b))*G*Lambda_sigma",
                 "1/(1+a+3*b)*Omega - sigma*Omega_sigma + (1+a+3*b)/(1+a+2*b)*sigma^(b/(1+a+3*b))*F*Omega_sigma"],
     "samples": [{"a": "1", "b": "1"}, {"a": "2", "b": "1"}, {"a": "-2", "b": "1"}]},

    {"label": "SL11", "algebra": "susy", "sigma": "x*t^(-1) - eps*ln(t)",
     "invariants": ["R - eps*ln(t)", "S - eps*ln(t)", "t^(-1)*xi", "psi"],
     "fields": {"R": "F + eps*ln(t)", "S": "G + eps*ln(t)", "xi": "t*Lambda", "psi": "Omega"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "t*sigma + eps*t*ln(t)",
     "reduced": ["-sigma*F_sigma - eps*F_sigma + G*F_sigma + eps + Omega_sigma*Lambda_sigma",
                 "-sigma*G_sigma - eps*G_sigma + F*G_sigma + eps + Lambda_sigma*Omega_sigma",
                 "Lambda - sigma*Lambda_sigma - eps*Lambda_sigma + G*Lambda_sigma",
                 "-sigma*Omega_sigma - eps*Omega_sigma + F*Omega_sigma"],
     "samples": [{"eps": "1"}, {"eps": "-1"}]},

    {"label": "SL12", "algebra": "susy", "sigma": "x*t^(-1) - eps*ln(t)",
     "invariants": ["R - eps*ln(t)", "S - eps*ln(t)", "xi", "t^(-1)*psi"],
     "fields": {"R": "F + eps*ln(t)", "S": "G + eps*ln(t)", "xi": "Lambda", "psi": "t*Omega"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "t*sigma + eps*t*ln(t)",
     "reduced": ["-sigma*F_sigma - eps*F_sigma + G*F_sigma + eps + Omega_sigma*Lambda_sigma",
                 "-sigma*G_sigma - eps*G_sigma + F*G_sigma + eps + Lambda_sigma*Omega_sigma",
                 "-sigma*Lambda_sigma - eps*Lambda_sigma + G*Lambda_sigma",
                 "Omega - sigma*Omega_sigma - eps*Omega_sigma + F*Omega_sigma"],
     "samples": [{"eps": "1"}, {"eps": "-1"}]},

    {"label": "SL13", "algebra": "susy", "sigma": "(1+a)*x*t^(-1) - eps*ln(t)",
     "invariants": ["R - eps/(1+a)*ln(t)", "S - eps/(1+a)*ln(t)",
                    "t^(-a/(1+a))*xi", "t^(-1/(1+a))*psi"],
     "fields": {"R": "F + eps/(1+a)*ln(t)", "S": "G + eps/(1+a)*ln(t)",
                "xi": "t^(a/(1+a))*Lambda", "psi": "t^(1/(1+a))*Omega"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "(t*sigma + eps*t*ln(t))/(1+a)",
     "reduced": ["-sigma*F_sigma - eps*F_sigma + (1+a)*G*F_sigma + eps/(1+a) + (1+a)^2*Omega_sigma*Lambda_sigma",
                 "-sigma*G_sigma - eps*G_sigma + (1+a)*F*G_sigma + eps/(1+a) + (1+a)^2*Lambda_sigma*Omega_sigma",
                 "a/(1+a)*Lambda - sigma*Lambda_sigma - eps*Lambda_sigma + (1+a)*G*Lambda_sigma",
                 "1/(1+a)*Omega - sigma*Omega_sigma - eps*Omega_sigma + (1+a)*F*Omega_sigma"],
     "samples": [{"a": "1", "eps": "1"}, {"a": "1", "eps": "-1"}, {"a": "2", "eps": "1"}]},

    {"label": "SL14", "algebra": "susy", "sigma": "x - 1/2*eps*t^2",
     "invariants": ["R - eps*t", "S - eps*t", "xi", "psi"],
     "fields": {"R": "F + eps*t", "S": "G + eps*t", "xi": "Lambda", "psi": "Omega"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma + 1/2*eps*t^2",
     "reduced": ["G*F_sigma + eps + Omega_sigma*Lambda_sigma",
                 "F*G_sigma + eps + Lambda_sigma*Omega_sigma",
                 "G*Lambda_sigma", "F*Omega_sigma"],
     "samples": [{"eps": "1"}, {"eps": "-1"}]},

    {"label": "SL15", "algebra": "susy", "sigma": "", "not_applicable": true,
     "invariants": ["x", "t", "R", "S", "psi"], "fields": {}, "reduced": []},
    {"label": "SL16", "algebra": "susy", "sigma": "", "not_applicable": true,
     "invariants": ["x", "t", "R", "S", "xi"], "fields": {}, "reduced": []},
    {"label": "SL17", "algebra": "susy", "sigma": "", "not_applicable": true,
     "invariants": ["x", "t", "R", "S", "psi - eps*xi"], "fields": {}, "reduced": [],
     "samples": [{"eps": "1"}, {"eps": "-1"}]},

    {"label": "SL18", "algebra": "susy", "sigma": "t",
     "invariants": ["R", "S", "xi - eta1*x", "psi - eta2*x"],
     "fields": {"R": "F", "S": "G", "xi": "Lambda + eta1*x", "psi": "Omega + eta2*x"},
     "field_args": {"F": ["t"], "G": ["t"], "Lambda": ["t"], "Omega": ["t"]},
     "reduced": ["F_t + eta2*eta1", "G_t + eta1*eta2",
                 "Lambda_t + eta1*G", "Omega_t + eta2*F"]},

    {"label": "SL19", "algebra": "susy", "sigma": "x",
     "invariants": ["R", "S", "xi - eta1*t", "psi - eta2*t"],
     "fields": {"R": "F", "S": "G", "xi": "Lambda + eta1*t", "psi": "Omega + eta2*t"},
     "field_args": {"F": ["x"], "G": ["x"], "Lambda": ["x"], "Omega": ["x"]},
     "reduced": ["G*F_x + Omega_x*Lambda_x", "F*G_x + Lambda_x*Omega_x",
                 "eta1 + G*Lambda_x", "eta2 + F*Omega_x"]},

    {"label": "SL20", "algebra": "susy", "sigma": "t",
     "invariants": ["R - x*t^(-1)", "S - x*t^(-1)", "xi - eta1*x*t^(-1)", "psi - eta2*x*t^(-1)"],
     "fields": {"R": "F + x*t^(-1)", "S": "G + x*t^(-1)",
                "xi": "Lambda + eta1*x*t^(-1)", "psi": "Omega + eta2*x*t^(-1)"},
     "field_args": {"F": ["t"], "G": ["t"], "Lambda": ["t"], "Omega": ["t"]},
     "reduced": ["t^2*F_t + t*G + eta2*eta1", "t^2*G_t + t*F + eta1*eta2",
                 "t*Lambda_t + eta1*G", "t*Omega_t + eta2*F"]},

    {"label": "SL21", "algebra": "susy", "sigma": "x*t^(-2/3)",
     "invariants": ["t^(1/3)*R", "t^(1/3)*S", "xi - 1/3*eta1*ln(t)", "psi - 1/3*eta2*ln(t)"],
     "fields": {"R": "t^(-1/3)*F", "S": "t^(-1/3)*G",
                "xi": "Lambda + 1/3*eta1*ln(t)", "psi": "Omega + 1/3*eta2*ln(t)"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma*t^(2/3)",
     "reduced": ["-1/3*F - 2/3*sigma*F_sigma + G*F_sigma + Omega_sigma*Lambda_sigma",
                 "-1/3*G - 2/3*sigma*G_sigma + F*G_sigma + Lambda_sigma*Omega_sigma",
                 "-2/3*sigma*Lambda_sigma + 1/3*eta1 + G*Lambda_sigma",
                 "-2/3*sigma*Omega_sigma + 1/3*eta2 + F*Omega_sigma"]},

    {"label": "SL22", "algebra": "susy", "sigma": "x*t^(-1)",
     "invariants": ["R", "S", "t^(-1)*xi", "psi - eta2*ln(t)"],
     "fields": {"R": "F", "S": "G", "xi": "t*Lambda", "psi": "Omega + eta2*ln(t)"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma*t",
     "reduced": ["-sigma*F_sigma + G*F_sigma + Omega_sigma*Lambda_sigma",
                 "-sigma*G_sigma + F*G_sigma + Lambda_sigma*Omega_sigma",
                 "Lambda - sigma*Lambda_sigma + G*Lambda_sigma",
                 "-sigma*Omega_sigma + eta2 + F*Omega_sigma"]},

    {"label": "SL23", "algebra": "susy", "sigma": "x*t^(-1)",
     "invariants": ["R", "S", "xi - eta1*ln(t)", "t^(-1)*psi"],
     "fields": {"R": "F", "S": "G", "xi": "Lambda + eta1*ln(t)", "psi": "t*Omega"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma*t",
     "reduced": ["-sigma*F_sigma + G*F_sigma + Omega_sigma*Lambda_sigma",
                 "-sigma*G_sigma + F*G_sigma + Lambda_sigma*Omega_sigma",
                 "-sigma*Lambda_sigma + eta1 + G*Lambda_sigma",
                 "Omega - sigma*Omega_sigma + F*Omega_sigma"]},

    {"label": "SL24", "algebra": "susy", "sigma": "x^((1+3*a)/(1+2*a))*t^(-1)",
     "invariants": ["t^(a/(1+3*a))*R", "t^(a/(1+3*a))*S",
                    "t^(-1/(1+3*a))*xi", "psi - eta2/(1+3*a)*ln(t)"],
     "fields": {"R": "t^(-a/(1+3*a))*F", "S": "t^(-a/(1+3*a))*G",
                "xi": "t^(1/(1+3*a))*Lambda", "psi": "Omega + eta2/(1+3*a)*ln(t)"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma^((1+2*a)/(1+3*a))*t^((1+2*a)/(1+3*a))",
     "reduced": ["-a/(1+3*a)*F - sigma*F_sigma + (1+3*a)/(1+2*a)*sigma^(a/(1+3*a))*G*F_sigma + ((1+3*a)/(1+2*a))^2*sigma^(2*a/(1+3*a))*Omega_sigma*Lambda_sigma",
                 "-a/(1+3*a)*G - sigma*G_sigma + (1+3*a)/(1+2*a)*sigma^(a/(1+3*a))*F*G_sigma + ((1+3*a)/(1+2*a))^2*sigma^(2*a/(1+3*a))*Lambda_sigma*Omega_sigma",
                 "1/(1+3*a)*Lambda - sigma*Lambda_sigma + (1+3*a)/(1+2*a)*sigma^(a/(1+3*a))*G*Lambda_sigma",
                 "-sigma*Omega_sigma + 1/(1+3*a)*eta2 + (1+3*a)/(1+2*a)*sigma^(a/(1+3*a))*F*Omega_sigma"],
     "samples": [{"a": "1"}, {"a": "2"}, {"a": "-2"}]},

    {"label": "SL25", "algebra": "susy", "sigma": "x^((1+3*a)/(1+2*a))*t^(-1)",
     "invariants": ["t^(a/(1+3*a))*R", "t^(a/(1+3*a))*S",
                    "xi - eta1/(1+3*a)*ln(t)", "t^(-1/(1+3*a))*psi"],
     "fields": {"R": "t^(-a/(1+3*a))*F", "S": "t^(-a/(1+3*a))*G",
                "xi": "Lambda + eta1/(1+3*a)*ln(t)", "psi": "t^(1/(1+3*a))*Omega"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma^((1+2*a)/(1+3*a))*t^((1+2*a)/(1+3*a))",
     "reduced": ["-a/(1+3*a)*F - sigma*F_sigma + (1+3*a)/(1+2*a)*sigma^(a/(1+3*a))*G*F_sigma + ((1+3*a)/(1+2*a))^2*sigma^(2*a/(1+3*a))*Omega_sigma*Lambda_sigma",
                 "-a/(1+3*a)*G - sigma*G_sigma + (1+3*a)/(1+2*a)*sigma^(a/(1+3*a))*F*G_sigma + ((1+3*a)/(1+2*a))^2*sigma^(2*a/(1+3*a))*Lambda_sigma*Omega_sigma",
                 "-sigma*Lambda_sigma + 1/(1+3*a)*eta1 + (1+3*a)/(1+2*a)*sigma^(a/(1+3*a))*G*Lambda_sigma",
                 "1/(1+3*a)*Omega - sigma*Omega_sigma + (1+3*a)/(1+2*a)*sigma^(a/(1+3*a))*F*Omega_sigma"],
     "samples": [{"a": "1"}, {"a": "2"}, {"a": "-2"}]},

    {"label": "SL26", "algebra": "susy", "sigma": "x*t^(-1) - eps*ln(t)",
     "invariants": ["R - eps*ln(t)", "S - eps*ln(t)", "t^(-1)*xi", "psi - eta2*ln(t)"],
     "fields": {"R": "F + eps*ln(t)", "S": "G + eps*ln(t)",
                "xi": "t*Lambda", "psi": "Omega + eta2*ln(t)"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "t*sigma + eps*t*ln(t)",
     "reduced": ["-sigma*F_sigma - eps*F_sigma + G*F_sigma + eps + Omega_sigma*Lambda_sigma",
                 "-sigma*G_sigma - eps*G_sigma + F*G_sigma + eps + Lambda_sigma*Omega_sigma",
                 "Lambda - sigma*Lambda_sigma - eps*Lambda_sigma + G*Lambda_sigma",
                 "-sigma*Omega_sigma - eps*Omega_sigma + F*Omega_sigma + eta2"],
     "samples": [{"eps": "1"}, {"eps": "-1"}]},

    {"label": "SL27", "algebra": "susy", "sigma": "x*t^(-1) - eps*ln(t)",
     "invariants": ["R - eps*ln(t)", "S - eps*ln(t)", "xi - eta1*ln(t)", "t^(-1)*psi"],
     "fields": {"R": "F + eps*ln(t)", "S": "G + eps*ln(t)",
                "xi": "Lambda + eta1*ln(t)", "psi": "t*Omega"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "t*sigma + eps*t*ln(t)",
     "reduced": ["-sigma*F_sigma - eps*F_sigma + G*F_sigma + eps + Omega_sigma*Lambda_sigma",
                 "-sigma*G_sigma - eps*G_sigma + F*G_sigma + eps + Lambda_sigma*Omega_sigma",
                 "-sigma*Lambda_sigma - eps*Lambda_sigma + G*Lambda_sigma + eta1",
                 "Omega - sigma*Omega_sigma - eps*Omega_sigma + F*Omega_sigma"],
     "samples": [{"eps": "1"}, {"eps": "-1"}]},

    {"label": "SL28", "algebra": "susy", "sigma": "x - 1/2*eps*t^2",
     "invariants": ["R - eps*t", "S - eps*t", "xi - eta1*eps*t", "psi - eta2*eps*t"],
     "fields": {"R": "F + eps*t", "S": "G + eps*t",
                "xi": "Lambda + eta1*eps*t", "psi": "Omega + eta2*eps*t"},
     "field_args": {"F": ["sigma"], "G": ["sigma"], "Lambda": ["sigma"], "Omega": ["sigma"]},
     "x_elim_power": 1, "x_elim": "sigma + 1/2*eps*t^2",
     "reduced": ["G*F_sigma + eps + Omega_sigma*Lambda_sigma",
                 "F*G_sigma + eps + Lambda_sigma*Omega_sigma",
                 "G*Lambda_sigma + eta1*eps", "F*Omega_sigma + eta2*eps"],
     "samples": [{"eps": "1"}, {"eps": "-1"}]}
  ]
})JSON";
}

}  // namespace hydrosym
