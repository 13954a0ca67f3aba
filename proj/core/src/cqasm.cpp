// Copyright 2026 The qacc Authors
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

#include "qacc/cqasm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qacc/errors.hpp"

namespace qacc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

bool parse_unsigned(std::string_view s, std::size_t& out) {
    if (s.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_double(std::string_view s, double& out) {
    if (s.empty()) {
        return false;
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
        if (s.empty() || s.front() == '-') {
            return false;
        }
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

// "q[12]" -> 12
bool parse_qubit_ref(std::string_view s, std::size_t& out) {
    if (s.size() < 4 || s[0] != 'q' || s[1] != '[' || s.back() != ']') {
        return false;
    }
    return parse_unsigned(trim(s.substr(2, s.size() - 3)), out);
}

class Parser {
public:
    Program run(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) {
                end = text.size();
            }
            ++line_no;
            std::string_view line = text.substr(start, end - start);
            if (const auto hash = line.find('#'); hash != std::string_view::npos) {
                line = line.substr(0, hash);
            }
            line = trim(line);
            if (!line.empty()) {
                handle_line(line, line_no);
            }
            if (end == text.size()) {
                break;
            }
            start = end + 1;
        }
        if (!seen_version_) {
            throw ParseError(0, "missing 'version' header");
        }
        if (!seen_qubits_) {
            throw ParseError(0, "missing 'qubits' header");
        }
        return std::move(program_);
    }

private:
    void handle_line(std::string_view line, std::size_t line_no) {
        const std::size_t ws = line.find_first_of(" \t");
        const std::string_view head = line.substr(0, ws);
        const std::string_view rest = ws == std::string_view::npos ? std::string_view{} : trim(line.substr(ws));

        if (!seen_version_) {
            if (head != "version") {
                throw ParseError(line_no, "missing 'version' header");
            }
            if (rest != "1.0") {
                throw ParseError(line_no, "unsupported version '" + std::string(rest) + "'");
            }
            program_.version = std::string(rest);
            seen_version_ = true;
            return;
        }
        if (head == "version") {
            throw ParseError(line_no, "duplicate 'version' header");
        }
        if (!seen_qubits_) {
            if (head != "qubits") {
                throw ParseError(line_no, "missing 'qubits' header");
            }
            std::size_t n = 0;
            if (!parse_unsigned(rest, n) || n == 0) {
                throw ParseError(line_no, "invalid qubit count '" + std::string(rest) + "'");
            }
            program_.num_qubits = n;
            seen_qubits_ = true;
            return;
        }
        if (head == "qubits") {
            throw ParseError(line_no, "duplicate 'qubits' header");
        }
        if (line.front() == '.') {
            const std::string name(line.substr(1));
            if (!is_valid_kernel_name(name)) {
                throw ParseError(line_no, "invalid kernel name '" + name + "'");
            }
            if (!kernel_names_.insert(name).second) {
                throw ParseError(line_no, "duplicate kernel name '" + name + "'");
            }
            program_.add_kernel(name);
            return;
        }
        program_.append(parse_instruction(head, rest, line_no));
    }

    Gate parse_instruction(std::string_view head, std::string_view rest, std::size_t line_no) {
        for (char c : head) {
            auto u = static_cast<unsigned char>(c);
            if (!(std::isalnum(u) || u == '_')) {
                throw ParseError(line_no, "unexpected character in '" + std::string(head) + "'");
            }
        }
        const auto kind = kind_from_mnemonic(head);
        if (!kind) {
            throw ParseError(line_no, "unknown gate '" + std::string(head) + "'");
        }
        Gate gate{*kind, {}, std::nullopt};
        if (!rest.empty()) {
            for (std::string_view token : split(rest, ',')) {
                std::size_t q = 0;
                double angle = 0.0;
                if (gate.angle) {
                    throw ParseError(line_no, "angle must be the last operand");
                }
                if (parse_qubit_ref(token, q)) {
                    if (q >= program_.num_qubits) {
                        throw ParseError(line_no, "qubit q[" + std::to_string(q) +
                                                      "] out of range for " +
                                                      std::to_string(program_.num_qubits) +
                                                      " qubits");
                    }
                    gate.qubits.push_back(q);
                } else if (parse_double(token, angle)) {
                    gate.angle = angle;
                } else {
                    throw ParseError(line_no, "invalid operand '" + std::string(token) + "'");
                }
            }
        }
        if (gate.qubits.size() != arity(*kind)) {
            throw ParseError(line_no, std::string(mnemonic(*kind)) + " takes " +
                                          std::to_string(arity(*kind)) + " qubit operand(s), got " +
                                          std::to_string(gate.qubits.size()));
        }
        if (takes_angle(*kind) && !gate.angle) {
            throw ParseError(line_no, std::string(mnemonic(*kind)) + " requires an angle");
        }
        if (!takes_angle(*kind) && gate.angle) {
            throw ParseError(line_no, std::string(mnemonic(*kind)) + " takes no angle");
        }
        try {
            validate_gate(gate, program_.num_qubits);
        } catch (const std::exception& e) {
            throw ParseError(line_no, e.what());
        }
        return gate;
    }

    Program program_;
    std::set<std::string> kernel_names_;
    bool seen_version_ = false;
    bool seen_qubits_ = false;
};

void emit_gate(std::ostringstream& out, const Gate& gate, const EmitOptions& options) {
    if (options.lower_swaps && gate.kind == GateKind::kSwap) {
        const std::size_t a = gate.qubits[0];
        const std::size_t b = gate.qubits[1];
        out << to_string(make_gate(GateKind::kCNOT, {a, b})) << '\n'
            << to_string(make_gate(GateKind::kCNOT, {b, a})) << '\n'
            << to_string(make_gate(GateKind::kCNOT, {a, b})) << '\n';
        return;
    }
    out << to_string(gate) << '\n';
}

}  // namespace

Program parse(std::string_view text) { return Parser{}.run(text); }

Program parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + e.detail());
    }
}

std::string emit(const Program& program, const EmitOptions& options) {
    std::ostringstream out;
    out << "version " << program.version << '\n';
    out << "qubits " << program.num_qubits << '\n';
    for (const auto& kernel : program.kernels) {
        if (!kernel.name.empty()) {
            out << '\n' << '.' << kernel.name << '\n';
        }
        for (const auto& gate : kernel.instructions) {
            emit_gate(out, gate, options);
        }
    }
    return out.str();
}

DependencyDAG dependency_graph(const Program& program) {
    return dependency_graph(program.instructions());
}

DependencyDAG dependency_graph(const std::vector<Gate>& instructions) {
    DependencyDAG dag;
    dag.num_nodes = instructions.size();
    dag.predecessors.resize(dag.num_nodes);
    dag.successors.resize(dag.num_nodes);
    std::vector<std::ptrdiff_t> last_on_qubit;
    for (std::size_t j = 0; j < instructions.size(); ++j) {
        for (std::size_t q : instructions[j].qubits) {
            if (q >= last_on_qubit.size()) {
                last_on_qubit.resize(q + 1, -1);
            }
            if (last_on_qubit[q] >= 0) {
                const auto i = static_cast<std::size_t>(last_on_qubit[q]);
                auto& preds = dag.predecessors[j];
                if (std::find(preds.begin(), preds.end(), i) == preds.end()) {
                    preds.push_back(i);
                    dag.successors[i].push_back(j);
                    dag.edges.emplace_back(i, j);
                }
            }
            last_on_qubit[q] = static_cast<std::ptrdiff_t>(j);
        }
    }
    std::sort(dag.edges.begin(), dag.edges.end());
    for (auto& preds : dag.predecessors) {
        std::sort(preds.begin(), preds.end());
    }
    return dag;
}

std::vector<std::size_t> topological_order(const DependencyDAG& dag, const ReadyPicker& pick) {
    std::vector<std::size_t> remaining(dag.num_nodes);
    for (std::size_t j = 0; j < dag.num_nodes; ++j) {
        remaining[j] = dag.predecessors[j].size();
    }
    std::vector<std::size_t> ready;
    for (std::size_t j = 0; j < dag.num_nodes; ++j) {
        if (remaining[j] == 0) {
            ready.push_back(j);
        }
    }
    std::vector<std::size_t> order;
    order.reserve(dag.num_nodes);
    while (!ready.empty()) {
        std::sort(ready.begin(), ready.end());
        const std::size_t pos = pick ? pick(ready) : 0;
        if (pos >= ready.size()) {
            throw std::out_of_range("ready picker returned an invalid position");
        }
        const std::size_t node = ready[pos];
        ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(pos));
        order.push_back(node);
        for (std::size_t next : dag.successors[node]) {
            if (--remaining[next] == 0) {
                ready.push_back(next);
            }
        }
    }
    if (order.size() != dag.num_nodes) {
        throw std::logic_error("dependency graph contains a cycle");
    }
    return order;
}

}  // namespace qacc
