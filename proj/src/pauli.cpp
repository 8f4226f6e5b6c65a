// Copyright 2026 The tcps-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tcps/pauli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tcps {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double binomial(std::size_t n, std::size_t k) {
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return r;
}

}  // namespace

PauliString::PauliString(std::size_t n_qubits, QubitMask x_mask, QubitMask z_mask)
    : n_qubits_(n_qubits), x_(x_mask), z_(z_mask) {
    if (n_qubits > 64) {
        throw std::invalid_argument("PauliString: at most 64 qubits");
    }
    if (n_qubits < 64 && ((x_mask | z_mask) >> n_qubits) != 0) {
        throw std::invalid_argument("PauliString: mask exceeds qubit count");
    }
}

PauliString PauliString::from_letters(std::string_view letters) {
    if (letters.size() > 64) {
        throw std::invalid_argument("PauliString: at most 64 letters");
    }
    QubitMask x = 0, z = 0;
    for (std::size_t q = 0; q < letters.size(); ++q) {
        switch (letters[q]) {
            case 'I':
                break;
            case 'X':
                x |= bit(q);
                break;
            case 'Y':
                x |= bit(q);
                z |= bit(q);
                break;
            case 'Z':
                z |= bit(q);
                break;
            default:
                throw std::invalid_argument(std::string("PauliString: invalid letter '") + letters[q] +
                                            "'");
        }
    }
    return PauliString(letters.size(), x, z);
}

std::size_t PauliString::weight() const noexcept {
    return static_cast<std::size_t>(std::popcount(x_ | z_));
}

char PauliString::letter(Qubit q) const {
    if (q >= n_qubits_) {
        throw std::out_of_range("PauliString::letter: qubit out of range");
    }
    const bool x = x_ & bit(q);
    const bool z = z_ & bit(q);
    return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

std::string PauliString::to_string() const {
    std::string s(n_qubits_, 'I');
    for (Qubit q = 0; q < n_qubits_; ++q) {
        s[q] = letter(q);
    }
    return s;
}

Gate PauliString::as_gate(std::size_t offset, Complex phase) const {
    return Gate::pauli(x_ << offset, z_ << offset, phase);
}

ObservableParseError::ObservableParseError(std::size_t line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Observable::Observable(std::size_t n_qubits, const std::vector<PauliTerm> &terms,
                       std::vector<std::string> *warnings)
    : n_qubits_(n_qubits) {
    std::map<PauliString, std::size_t> index;
    for (const auto &t : terms) {
        if (!std::isfinite(t.coefficient)) {
            throw std::invalid_argument("Observable: non-finite coefficient for " +
                                        t.pauli.to_string());
        }
        if (t.pauli.num_qubits() != n_qubits) {
            throw std::invalid_argument("Observable: string " + t.pauli.to_string() +
                                        " does not match qubit count " + std::to_string(n_qubits));
        }
        auto [it, inserted] = index.emplace(t.pauli, terms_.size());
        if (inserted) {
            terms_.push_back(t);
        } else {
            terms_[it->second].coefficient += t.coefficient;
        }
    }
    std::vector<PauliTerm> kept;
    for (auto &t : terms_) {
        if (t.coefficient == 0.0) {
            const std::string msg = "dropping zero-coefficient term " + t.pauli.to_string();
            if (warnings) {
                warnings->push_back(msg);
            } else {
                std::cerr << "warning: " << msg << "\n";
            }
            continue;
        }
        kept.push_back(t);
    }
    terms_ = std::move(kept);
    if (terms_.empty()) {
        throw std::invalid_argument("Observable: no nonzero terms");
    }
}

double Observable::max_abs_coefficient() const noexcept {
    double m = 0.0;
    for (const auto &t : terms_) {
        m = std::max(m, std::abs(t.coefficient));
    }
    return m;
}

bool operator==(const Observable &a, const Observable &b) {
    if (a.n_qubits_ != b.n_qubits_ || a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t j = 0; j < a.terms_.size(); ++j) {
        if (a.terms_[j].coefficient != b.terms_[j].coefficient ||
            a.terms_[j].pauli != b.terms_[j].pauli) {
            return false;
        }
    }
    return true;
}

Observable parse_observable(std::string_view text, std::vector<std::string> *warnings) {
    std::size_t line_no = 0;
    std::size_t n_qubits = 0;
    bool have_header = false;
    std::vector<PauliTerm> terms;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!have_header) {
            const auto r = std::from_chars(line.data(), line.data() + line.size(), n_qubits);
            if (r.ec != std::errc{} || r.ptr != line.data() + line.size() || n_qubits == 0 ||
                n_qubits > 64) {
                throw ObservableParseError(line_no, "expected a positive qubit count, got '" +
                                                        std::string(line) + "'");
            }
            have_header = true;
            continue;
        }
        const auto split = line.find_first_of(" \t");
        if (split == std::string_view::npos) {
            throw ObservableParseError(line_no, "expected '<coefficient> <letters>'");
        }
        const auto coeff_text = line.substr(0, split);
        const auto letters = trim(line.substr(split));
        double coefficient = 0.0;
        const auto r =
            std::from_chars(coeff_text.data(), coeff_text.data() + coeff_text.size(), coefficient);
        if (r.ec != std::errc{} || r.ptr != coeff_text.data() + coeff_text.size() ||
            !std::isfinite(coefficient)) {
            throw ObservableParseError(line_no, "bad coefficient '" + std::string(coeff_text) + "'");
        }
        if (letters.find_first_of(" \t") != std::string_view::npos) {
            throw ObservableParseError(line_no, "unexpected trailing fields");
        }
        if (letters.size() != n_qubits) {
            throw ObservableParseError(line_no, "string '" + std::string(letters) + "' has length " +
                                                    std::to_string(letters.size()) + ", expected " +
                                                    std::to_string(n_qubits));
        }
        const auto bad = letters.find_first_not_of("IXYZ");
        if (bad != std::string_view::npos) {
            throw ObservableParseError(line_no, std::string("letter '") + letters[bad] +
                                                    "' is not one of I, X, Y, Z");
        }
        terms.push_back({coefficient, PauliString::from_letters(letters)});
    }
    if (!have_header) {
        throw ObservableParseError(line_no, "missing qubit count");
    }
    if (terms.empty()) {
        throw ObservableParseError(line_no, "observable has no terms");
    }
    return Observable(n_qubits, terms, warnings);
}

Observable load_observable(const std::filesystem::path &path, std::vector<std::string> *warnings) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open observable file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_observable(buf.str(), warnings);
}

std::string serialize_observable(const Observable &obs) {
    std::string out = std::to_string(obs.num_qubits()) + "\n";
    for (const auto &t : obs) {
        out += format_double(t.coefficient) + " " + t.pauli.to_string() + "\n";
    }
    return out;
}

double exact_expectation(const StateVector &state, const PauliString &pauli, std::size_t offset) {
    if (offset + pauli.num_qubits() > state.num_qubits()) {
        throw std::invalid_argument("exact_expectation: string does not fit the state");
    }
    const QubitMask x = pauli.x_mask() << offset;
    const QubitMask z = pauli.z_mask() << offset;
    const int ny = std::popcount(x & z);
    const auto amp = state.amplitudes();
    Complex total{};
    for (std::size_t b = 0; b < amp.size(); ++b) {
        const Complex term = std::conj(amp[b ^ x]) * amp[b];
        total += (std::popcount(b & z) & 1) ? -term : term;
    }
    static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    total *= kIPow[ny & 3];
    if (std::abs(total.imag()) > 1e-10) {
        throw std::logic_error("exact_expectation: imaginary part " + std::to_string(total.imag()));
    }
    return std::clamp(total.real(), -1.0, 1.0);
}

double exact_observable_value(const StateVector &state, const Observable &obs) {
    if (obs.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("exact_observable_value: qubit count mismatch");
    }
    double total = 0.0;
    for (const auto &t : obs) {
        total += t.coefficient * exact_expectation(state, t.pauli);
    }
    return total;
}

ObservableInstance random_observable(std::size_t n_qubits, std::size_t n_terms,
                                     const GeneratorSettings &settings, std::uint64_t seed) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("random_observable: qubit count out of range");
    }
    if (n_terms == 0) {
        throw std::invalid_argument("random_observable: need at least one term");
    }
    const double space = std::ldexp(1.0, static_cast<int>(2 * n_qubits)) - 1.0;
    if (static_cast<double>(n_terms) > space) {
        throw std::invalid_argument("random_observable: N = " + std::to_string(n_terms) +
                                    " exceeds 4^n - 1 distinct strings");
    }
    Rng rng(seed);
    std::vector<PauliTerm> terms;

    if (settings.mode == GeneratorMode::kEqualMean) {
        if (!(settings.target_mean > 0.0 && settings.target_mean <= 1.0)) {
            throw std::invalid_argument("random_observable: target_mean must lie in (0, 1]");
        }
        std::size_t k = 1;
        while (k <= n_qubits && binomial(n_qubits, k) < static_cast<double>(n_terms)) {
            ++k;
        }
        if (k > n_qubits) {
            throw std::invalid_argument("random_observable: equal-mean mode cannot place " +
                                        std::to_string(n_terms) + " Z-strings on " +
                                        std::to_string(n_qubits) + " qubits");
        }
        // Draw N distinct k-subsets.
        std::set<QubitMask> chosen;
        std::vector<Qubit> qubits(n_qubits);
        std::iota(qubits.begin(), qubits.end(), Qubit{0});
        while (chosen.size() < n_terms) {
            std::shuffle(qubits.begin(), qubits.end(), rng);
            QubitMask m = 0;
            for (std::size_t i = 0; i < k; ++i) {
                m |= bit(qubits[i]);
            }
            if (chosen.insert(m).second) {
                terms.push_back({settings.coefficient, PauliString(n_qubits, 0, m)});
            }
        }
        const double theta = std::acos(std::pow(settings.target_mean, 1.0 / static_cast<double>(k)));
        PreparationCircuit prep{n_qubits, {}, seed};
        for (Qubit q = 0; q < n_qubits; ++q) {
            prep.gates.push_back(Gate::unitary(gates::ry(theta), q));
        }
        return {Observable(n_qubits, terms), std::move(prep)};
    }

    const QubitMask full = n_qubits == 64 ? ~QubitMask{0} : (bit(n_qubits) - 1);
    std::uniform_int_distribution<QubitMask> mask_dist(0, full);
    std::uniform_real_distribution<double> magnitude(0.05, 1.0);
    std::set<std::pair<QubitMask, QubitMask>> chosen;
    while (chosen.size() < n_terms) {
        const QubitMask x = mask_dist(rng);
        const QubitMask z = mask_dist(rng);
        if ((x | z) == 0 || !chosen.insert({x, z}).second) {
            continue;
        }
        const double sign = (rng() & 1) ? -1.0 : 1.0;
        terms.push_back({sign * magnitude(rng) * settings.coefficient_scale, PauliString(n_qubits, x, z)});
    }
    return {Observable(n_qubits, terms),
            random_preparation(n_qubits, settings.depth, derive_seed(seed, 1))};
}

const char *to_string(TermClass c) noexcept {
    switch (c) {
        case TermClass::kEncodable:
            return "encodable";
        case TermClass::kNearZero:
            return "near-zero";
        default:
            return "near-extremal";
    }
}

RoughEstimate classify_mean(std::size_t term, double mean, std::size_t shots, double delta) {
    if (!(delta > 0.0 && delta < 0.5)) {
        throw std::invalid_argument("classify_mean: delta must lie in (0, 1/2)");
    }
    RoughEstimate r{term, std::clamp(mean, -1.0, 1.0), shots, TermClass::kEncodable, mean >= 0.0 ? 1 : -1};
    const double m = std::abs(r.mean);
    if (m < delta) {
        r.classification = TermClass::kNearZero;
    } else if (m > 1.0 - delta) {
        r.classification = TermClass::kNearExtremal;
    }
    return r;
}

EncodabilityReport validate_encodable(const Observable &obs, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("validate_encodable: epsilon must lie in (0, 1)");
    }
    EncodabilityReport report;
    const double amax = obs.max_abs_coefficient();
    report.max_feasible_epsilon = 1.0 / (4.0 * amax * amax);
    const double root = std::sqrt(epsilon);
    for (std::size_t j = 0; j < obs.size(); ++j) {
        // |a| sqrt(eps) <= 1/2 is the same condition as 2 sqrt(eps) |a| <= 1.
        if (std::abs(obs[j].coefficient) * root > 0.5 + 1e-15) {
            report.violating_terms.push_back(j);
        }
    }
    report.feasible = report.violating_terms.empty();
    return report;
}

}  // namespace tcps
