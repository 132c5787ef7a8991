// Copyright 2026 The cyclesep Authors
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

#include "cyclesep/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "cyclesep/accept.h"
#include "cyclesep/circuits.h"
#include "cyclesep/cycle_index.h"
#include "cyclesep/exact.h"
#include "cyclesep/group.h"
#include "cyclesep/simulator.h"
#include "cyclesep/states.h"

namespace cyclesep {

namespace {

// Records |error| against the tolerance. NaN counts as a failure.
void observe(IdentityCheck &check, double error, const std::string &where) {
    check.cases++;
    error = std::abs(error);
    if (!(error <= check.tolerance)) {
        if (check.passed) {
            check.detail = where;
        }
        check.passed = false;
    }
    if (std::isnan(error) || error > check.max_error) {
        check.max_error = error;
    }
}

std::vector<Spectrum> sample_spectra(std::mt19937_64 &rng, size_t count, size_t max_dim, bool mixed_only) {
    std::uniform_int_distribution<size_t> dim(mixed_only ? 2 : 1, max_dim);
    std::vector<Spectrum> out;
    out.push_back(Spectrum::from_eigenvalues({0.5, 0.5}));
    out.push_back(Spectrum::from_eigenvalues({2.0 / 3, 1.0 / 3}));
    while (out.size() < count + 2) {
        out.push_back(random_spectrum(rng, dim(rng)));
    }
    return out;
}

std::string label(const Spectrum &s, size_t index, size_t k) {
    return "spectrum #" + std::to_string(index) + " (rank " + std::to_string(s.rank()) + "), k=" + std::to_string(k);
}

IdentityCheck five_way(const std::vector<Spectrum> &spectra) {
    IdentityCheck check{"five-way evaluator agreement", true, 0, 1e-10, 0, ""};
    for (size_t i = 0; i < spectra.size(); i++) {
        auto t = power_traces(spectra[i], 10);
        for (size_t k = 1; k <= 10; k++) {
            std::vector<double> v = {accept_symmetric_recurrence(t, k), accept_symmetric_permanent(t, k)};
            if (k <= 8) {
                v.push_back(accept_symmetric_partition(t, k));
                v.push_back(accept_symmetric_bell(t, k));
                v.push_back(accept_symmetric_determinant(t, k));
            }
            auto [lo, hi] = std::minmax_element(v.begin(), v.end());
            observe(check, *hi - *lo, label(spectra[i], i, k));
        }
    }
    return check;
}

IdentityCheck strict_decrease(const std::vector<Spectrum> &spectra) {
    IdentityCheck check{"p^(k+1) < p^(k) for mixed spectra, k <= 12", true, 0, 0, 0, ""};
    for (size_t i = 0; i < spectra.size(); i++) {
        auto p = symmetric_sequence(power_traces(spectra[i], 13), 13);
        for (size_t k = 1; k <= 12; k++) {
            // A tie counts as a violation, hence the nudge past the zero tolerance.
            double step = p[k + 1] - p[k];
            observe(check, step < 0 ? 0 : std::max(step, 1e-300), label(spectra[i], i, k));
        }
    }
    return check;
}

IdentityCheck upper_bound(const std::vector<Spectrum> &spectra) {
    // The bound is attained at k = 1 and k = 2, so rounding needs some slack.
    IdentityCheck check{"p^(k) <= (1/k) sum_j t_j", true, 0, 1e-12, 0, ""};
    for (size_t i = 0; i < spectra.size(); i++) {
        auto p = symmetric_sequence(power_traces(spectra[i], 12), 12);
        for (size_t k = 1; k <= 12; k++) {
            double over = p[k] - acceptance_upper_bound(spectra[i], k);
            observe(check, std::max(over, 0.0), label(spectra[i], i, k));
        }
    }
    return check;
}

std::vector<GroupSpec> named_groups(size_t k_max) {
    std::vector<GroupSpec> out;
    for (size_t k = 2; k <= k_max; k++) {
        out.push_back(GroupSpec::symmetric(k));
        out.push_back(GroupSpec::cyclic(k));
        if (k >= 3) {
            out.push_back(GroupSpec::dihedral(k));
            out.push_back(GroupSpec::alternating(k));
        }
    }
    out.push_back(GroupSpec::quaternion());
    out.push_back(GroupSpec::product_cyclic(2, 2));
    out.push_back(GroupSpec::product_cyclic(3, 2));
    return out;
}

IdentityCheck faithfulness() {
    IdentityCheck check{"faithfulness on pure and nearly pure spectra", true, 0, 1e-12, 0, ""};
    auto pure = Spectrum::pure();
    auto near = Spectrum::from_eigenvalues({0.99, 0.01});
    for (const auto &spec : named_groups(8)) {
        observe(check, accept_group(spec, pure).value - 1, spec.str() + " pure");
        double gap = 1 - accept_group(spec, near).value;
        // The nearly pure spectrum must be rejected with probability above 1e-6.
        observe(check, gap > 1e-6 ? 0 : 1e-6 - gap + 1, spec.str() + " at (0.99, 0.01)");
    }
    return check;
}

IdentityCheck subgroup_ordering(const std::vector<Spectrum> &spectra) {
    IdentityCheck check{"p(C_k) >= p(D_k) >= p(S_k) and p(A_k) >= p(S_k)", true, 0, 1e-12, 0, ""};
    for (size_t i = 0; i < spectra.size(); i++) {
        for (size_t k = 3; k <= 8; k++) {
            double c = accept_group(GroupSpec::cyclic(k), spectra[i]).value;
            double d = accept_group(GroupSpec::dihedral(k), spectra[i]).value;
            double a = accept_group(GroupSpec::alternating(k), spectra[i]).value;
            double s = accept_group(GroupSpec::symmetric(k), spectra[i]).value;
            double worst = std::max({d - c, s - d, s - a, 0.0});
            observe(check, worst, label(spectra[i], i, k));
        }
    }
    return check;
}

IdentityCheck brute_force(const std::vector<Spectrum> &spectra) {
    IdentityCheck check{"closed-form cycle index equals element enumeration", true, 0, 0, 0, ""};
    for (const auto &spec : named_groups(7)) {
        auto closed = cycle_index_of(spec);
        auto group = realize(spec);
        auto enumerated = cycle_index(group);
        observe(check, closed == enumerated ? 0 : 1, spec.str() + " polynomial");
        for (size_t i = 0; i < 3 && i < spectra.size(); i++) {
            auto t = power_traces(spectra[i], spec.degree());
            std::vector<Rational> x;
            for (double v : t.values()) {
                x.push_back(exact_rational(v));
            }
            Rational direct = 0;
            for (const auto &g : group.elements()) {
                Rational term = 1;
                for (uint32_t len : g.cycle_type().parts()) {
                    term *= x[len - 1];
                }
                direct += term;
            }
            direct /= Rational(static_cast<int64_t>(group.order()));
            observe(check, evaluate_exact(closed, x) == direct ? 0 : 1, spec.str() + " exact value");
        }
    }
    return check;
}

IdentityCheck projector_vs_formula(const std::vector<Spectrum> &spectra) {
    IdentityCheck check{"projector trace equals Z(G) at power traces", true, 0, 1e-10, 0, ""};
    std::vector<std::pair<GroupSpec, size_t>> cases;
    for (const auto &spec : named_groups(6)) {
        if (spec.degree() <= 6) {
            cases.emplace_back(spec, 2);
        }
        if (spec.degree() <= 4) {
            cases.emplace_back(spec, 3);
        }
    }
    cases.emplace_back(GroupSpec::quaternion(), 2);
    for (const auto &[spec, d] : cases) {
        for (size_t i = 0; i < spectra.size() && i < 6; i++) {
            if (spectra[i].rank() > d) {
                continue;
            }
            double trace = projector_trace(spec, spectra[i], spec.degree(), d);
            observe(check, trace - accept_group(spec, spectra[i]).value,
                    spec.str() + " d=" + std::to_string(d) + " spectrum #" + std::to_string(i));
        }
    }
    return check;
}

IdentityCheck projector_basis_independence(std::mt19937_64 &rng) {
    IdentityCheck check{"projector trace is unitarily invariant", true, 0, 1e-10, 0, ""};
    for (const auto &spec : {GroupSpec::symmetric(3), GroupSpec::cyclic(4), GroupSpec::dihedral(4)}) {
        auto s = random_spectrum(rng, 3);
        Eigen::MatrixXcd u = random_unitary(rng, 3);
        Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(3, 3);
        for (Eigen::Index i = 0; i < 3; i++) {
            diag(i, i) = s[static_cast<size_t>(i)];
        }
        Eigen::MatrixXcd rho = u * diag * u.adjoint();
        observe(check, projector_trace(realize(spec), rho) - accept_group(spec, s).value, spec.str());
    }
    return check;
}

IdentityCheck projector_idempotent() {
    IdentityCheck check{"projector is idempotent", true, 0, 1e-10, 0, ""};
    for (const auto &spec : {GroupSpec::symmetric(3), GroupSpec::cyclic(4), GroupSpec::dihedral(4),
                             GroupSpec::alternating(4), GroupSpec::cyclic(3)}) {
        for (size_t d : {2, 3}) {
            Eigen::MatrixXd pi = projector_matrix(realize(spec), d);
            observe(check, (pi * pi - pi).cwiseAbs().maxCoeff(), spec.str() + " d=" + std::to_string(d));
        }
    }
    return check;
}

IdentityCheck circuit_vs_formula(const std::string &name, const std::vector<Spectrum> &spectra,
                                 const std::vector<std::pair<GroupSpec, CircuitPlan>> &plans) {
    IdentityCheck check{name, true, 0, 1e-9, 0, ""};
    for (const auto &[spec, plan] : plans) {
        for (size_t i = 0; i < spectra.size() && i < 6; i++) {
            if (spectra[i].rank() > plan.local_dim) {
                continue;
            }
            observe(check, simulate(plan, spectra[i]) - accept_group(spec, spectra[i]).value,
                    spec.str() + " spectrum #" + std::to_string(i));
        }
    }
    return check;
}

IdentityCheck layer_states() {
    IdentityCheck check{"U_i and T_{j,j+1} prepare |+>_{S_i}", true, 0, 1e-12, 0, ""};
    for (size_t i = 1; i <= 8; i++) {
        observe(check, (prepare_layer_state(i) - layer_state_closed_form(i)).cwiseAbs().maxCoeff(),
                "i=" + std::to_string(i));
    }
    return check;
}

IdentityCheck prep_unitarity() {
    IdentityCheck check{"control preparation gates are unitary", true, 0, 1e-12, 0, ""};
    auto defect = [](const Eigen::MatrixXd &m) {
        return (m.transpose() * m - Eigen::MatrixXd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
    };
    observe(check, defect(hadamard()), "H");
    for (size_t i = 1; i <= 8; i++) {
        observe(check, defect(layer_rotation(i)), "U_" + std::to_string(i));
        for (size_t j = 1; j < i; j++) {
            observe(check, defect(layer_spread(i, j)), "T_" + std::to_string(j) + " in layer " + std::to_string(i));
        }
    }
    return check;
}

IdentityCheck polya_integrality() {
    IdentityCheck check{"Polya colouring counts are integers", true, 0, 0, 0, ""};
    for (const auto &spec : named_groups(6)) {
        auto z = cycle_index_of(spec);
        for (uint64_t r = 1; r <= 4; r++) {
            observe(check, is_integer(polya_colorings(z, r)) ? 0 : 1, spec.str() + " r=" + std::to_string(r));
        }
    }
    return check;
}

}  // namespace

std::vector<IdentityCheck> run_identity_battery(const VerifyOptions &options) {
    std::mt19937_64 rng(options.seed);
    auto spectra = sample_spectra(rng, options.random_spectra, options.max_dim, false);
    auto mixed = sample_spectra(rng, 20, options.max_dim, true);
    auto qubit_spectra = sample_spectra(rng, 4, 2, true);

    std::vector<std::pair<GroupSpec, CircuitPlan>> symmetric_plans, cyclic_plans, dihedral_plans, qudit_plans;
    for (size_t k = 2; k <= 5; k++) {
        symmetric_plans.emplace_back(GroupSpec::symmetric(k), build_symmetric_recursive(k, 2));
    }
    for (size_t k : {2, 4, 8}) {
        cyclic_plans.emplace_back(GroupSpec::cyclic(k), build_cyclic_binary(k, 2));
    }
    for (size_t k : {4, 8}) {
        dihedral_plans.emplace_back(GroupSpec::dihedral(k), build_dihedral(k, 2));
    }
    for (const auto &spec : {GroupSpec::symmetric(3), GroupSpec::alternating(4), GroupSpec::cyclic(5),
                             GroupSpec::dihedral(5), GroupSpec::quaternion()}) {
        qudit_plans.emplace_back(spec, build_qudit_exact(spec, 2));
    }

    std::vector<IdentityCheck> checks;
    checks.push_back(five_way(spectra));
    checks.push_back(strict_decrease(mixed));
    checks.push_back(upper_bound(mixed));
    checks.push_back(faithfulness());
    checks.push_back(subgroup_ordering(mixed));
    checks.push_back(brute_force(spectra));
    checks.push_back(projector_vs_formula(spectra));
    checks.push_back(projector_basis_independence(rng));
    checks.push_back(projector_idempotent());
    checks.push_back(circuit_vs_formula("symmetric recursive circuit equals p^(k)", qubit_spectra, symmetric_plans));
    checks.push_back(circuit_vs_formula("binary cyclic circuit equals Z(C_k), k a power of two", qubit_spectra,
                                        cyclic_plans));
    checks.push_back(circuit_vs_formula("binary dihedral circuit equals Z(D_k), k a power of two", qubit_spectra,
                                        dihedral_plans));
    checks.push_back(circuit_vs_formula("qudit-controlled circuit equals Z(G)", qubit_spectra, qudit_plans));
    checks.push_back(layer_states());
    checks.push_back(prep_unitarity());
    checks.push_back(polya_integrality());
    return checks;
}

bool all_passed(const std::vector<IdentityCheck> &checks) {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck &c) { return c.passed; });
}

}  // namespace cyclesep
