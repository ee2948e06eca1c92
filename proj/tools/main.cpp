#include <CLI11.hpp>
#include <json.hpp>

#include <zonalg/cli.hpp>
#include <zonalg/errors.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int fail_input(const std::string& message, const std::string& format) {
    if (format == "text") {
        std::cout << "status: error\nmessage: " << message << "\n";
    } else {
        nlohmann::ordered_json doc{{"status", "error"}, {"message", message}};
        std::cout << doc.dump() << "\n";
    }
    return 2;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw zonalg::ParseError("empty entry in integer list");
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw zonalg::ParseError("bad integer: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw zonalg::ParseError("empty integer list");
    return out;
}

std::vector<std::vector<long long>> parse_columns(const std::string& packed) {
    std::vector<std::vector<long long>> cols;
    std::stringstream ss(packed);
    std::string chunk;
    while (std::getline(ss, chunk, ';')) {
        std::vector<long long> col;
        for (int v : parse_int_list(chunk)) col.push_back(v);
        cols.push_back(std::move(col));
    }
    if (cols.empty()) throw zonalg::ParseError("empty column list");
    return cols;
}

std::string slurp(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic toolkit for zonotopal spaces of integer configurations"};

    std::vector<std::string> command;
    std::string input_path;
    std::string order_csv;
    std::string b0_packed;
    std::string format = "json";
    int degcap = -1;
    unsigned seed = 0;

    app.add_option("command", command,
                   "command words, e.g. `analyze`, `hilbert central`, `verify ehrhart`")
        ->required();
    app.add_option("-i,--input", input_path,
                   "input file (JSON job or whitespace matrix); reads stdin when omitted");
    app.add_option("--degcap", degcap, "truncation degree override");
    app.add_option("--order", order_csv, "column order, comma separated indices");
    app.add_option("--b0", b0_packed, "appended basis columns, e.g. \"1,0;0,1\"");
    app.add_option("--seed", seed, "seed for generic offset and translation search");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail_input(e.what(), format);
    }

    std::string text;
    if (!input_path.empty()) {
        std::ifstream in(input_path);
        if (!in) return fail_input("cannot open input file: " + input_path, format);
        text = slurp(in);
    } else {
        text = slurp(std::cin);
    }

    zonalg::JobSpec spec;
    try {
        if (!blank(text)) spec = zonalg::parse_input(text);
        if (degcap >= 0) spec.degcap = degcap;
        if (!order_csv.empty()) spec.order = parse_int_list(order_csv);
        if (!b0_packed.empty()) spec.b0 = parse_columns(b0_packed);
        if (app.count("--seed") > 0) spec.seed = seed;
    } catch (const zonalg::Error& e) {
        return fail_input(e.what(), format);
    } catch (const std::exception& e) {
        return fail_input(e.what(), format);
    }

    zonalg::RunResult res = zonalg::run(command, spec, format);
    std::cout << res.output << "\n";
    return res.exit_code;
}
