#include "cts/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cts {

using nlohmann::json;

namespace {

json vertex_json(Vertex v) { return json::array({v.row, v.col}); }

Vertex vertex_from(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected [row,col] pair");
    return {j[0].get<int>(), j[1].get<int>()};
}

std::string kind_str(SeqKind kind) {
    switch (kind) {
        case SeqKind::Start: return "start";
        case SeqKind::Task: return "task";
        case SeqKind::Destination: return "destination";
    }
    return "?";
}

SeqKind kind_from(const std::string& s) {
    if (s == "start") return SeqKind::Start;
    if (s == "task") return SeqKind::Task;
    if (s == "destination") return SeqKind::Destination;
    throw std::invalid_argument("unknown sequence kind: " + s);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
    json doc;
    doc["mode"] = to_string(instance.mode);
    doc["map"] = instance.map.to_rows();
    doc["agents"] = json::array();
    for (const auto& a : instance.agents) {
        json agent;
        agent["id"] = a.id;
        agent["start"] = vertex_json(a.start);
        agent["dest"] = a.destination ? vertex_json(*a.destination) : json(nullptr);
        doc["agents"].push_back(agent);
    }
    doc["tasks"] = json::array();
    for (const auto& t : instance.tasks) {
        json task;
        task["id"] = t.id;
        task["loc"] = vertex_json(t.location);
        task["assignees"] = t.assignees;
        doc["tasks"].push_back(task);
    }
    return doc.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
    json doc = json::parse(text);
    Instance inst{GridMap::from_rows(doc.at("map").get<std::vector<std::string>>()),
                  {},
                  {},
                  mode_from_string(doc.at("mode").get<std::string>())};
    for (const auto& a : doc.at("agents")) {
        AgentSpec agent;
        agent.id = a.at("id").get<int>();
        agent.start = vertex_from(a.at("start"));
        if (a.contains("dest") && !a.at("dest").is_null())
            agent.destination = vertex_from(a.at("dest"));
        inst.agents.push_back(agent);
    }
    for (const auto& t : doc.at("tasks")) {
        TaskSpec task;
        task.id = t.at("id").get<int>();
        task.location = vertex_from(t.at("loc"));
        task.assignees = t.at("assignees").get<std::vector<int>>();
        inst.tasks.push_back(task);
    }
    inst.validate();
    return inst;
}

Instance load_instance(const std::string& path) {
    return instance_from_json(read_file(path));
}

void save_instance(const Instance& instance, const std::string& path) {
    write_file(path, instance_to_json(instance));
}

std::string solution_to_json(const SolveResult& result, const std::string& variant) {
    json doc;
    doc["status"] = to_string(result.status);
    doc["variant"] = variant;
    doc["phase"] = result.phase ? json(std::string(1, result.phase)) : json(nullptr);
    doc["flowtime"] = result.flowtime;
    doc["cost_lb"] = result.cost_lb;
    doc["solution_tree"] = result.solution_tree;
    doc["stats"] = {{"roots_generated", result.stats.roots_generated},
                    {"tsp_calls", result.stats.tsp_calls},
                    {"hl_expansions", result.stats.hl_expansions},
                    {"ll_calls", result.stats.ll_calls},
                    {"runtime_seconds", result.stats.runtime_seconds}};
    doc["agents"] = json::array();
    for (const auto& path : result.paths) {
        json agent;
        agent["id"] = path.agent_id;
        agent["cost"] = path.cost;
        agent["path"] = json::array();
        for (const Vertex& v : path.steps) agent["path"].push_back(vertex_json(v));
        agent["visits"] = json::array();
        for (const auto& visit : path.visits) {
            json v;
            v["vertex"] = vertex_json(visit.vertex);
            v["kind"] = kind_str(visit.kind);
            v["task"] = visit.task_id ? json(visit.task_id) : json(nullptr);
            v["t"] = visit.time;
            agent["visits"].push_back(v);
        }
        doc["agents"].push_back(agent);
    }
    return doc.dump(2) + "\n";
}

SolveResult solution_from_json(const std::string& text) {
    json doc = json::parse(text);
    SolveResult result;
    std::string status = doc.at("status").get<std::string>();
    if (status == "solved")
        result.status = SolveStatus::Solved;
    else if (status == "infeasible")
        result.status = SolveStatus::Infeasible;
    else if (status == "timeout")
        result.status = SolveStatus::Timeout;
    else
        throw std::invalid_argument("unknown status: " + status);
    if (doc.contains("phase") && !doc.at("phase").is_null())
        result.phase = doc.at("phase").get<std::string>().at(0);
    result.flowtime = doc.at("flowtime").get<Cost>();
    result.cost_lb = doc.value("cost_lb", Cost(-1));
    result.solution_tree = doc.value("solution_tree", 0);
    if (doc.contains("stats")) {
        const auto& s = doc.at("stats");
        result.stats.roots_generated = s.value("roots_generated", 0LL);
        result.stats.tsp_calls = s.value("tsp_calls", 0LL);
        result.stats.hl_expansions = s.value("hl_expansions", 0LL);
        result.stats.ll_calls = s.value("ll_calls", 0LL);
        result.stats.runtime_seconds = s.value("runtime_seconds", 0.0);
    }
    for (const auto& agent : doc.at("agents")) {
        TimedPath path;
        path.agent_id = agent.at("id").get<int>();
        for (const auto& v : agent.at("path")) path.steps.push_back(vertex_from(v));
        path.cost = agent.value("cost", Cost(path.steps.size()) - 1);
        for (const auto& v : agent.at("visits")) {
            Visit visit;
            visit.vertex = vertex_from(v.at("vertex"));
            visit.kind = kind_from(v.at("kind").get<std::string>());
            visit.task_id = v.at("task").is_null() ? 0 : v.at("task").get<int>();
            visit.time = v.at("t").get<int>();
            path.visits.push_back(visit);
        }
        result.paths.push_back(std::move(path));
    }
    return result;
}

SolveResult load_solution(const std::string& path) {
    return solution_from_json(read_file(path));
}

std::string violations_to_json(const std::vector<Violation>& violations) {
    json doc = json::array();
    for (const auto& v : violations) {
        json item;
        item["kind"] = to_string(v.kind);
        item["agent"] = v.agent_a;
        if (v.agent_b) item["agent_b"] = v.agent_b;
        if (v.task_id) item["task"] = v.task_id;
        item["vertex"] = vertex_json(v.vertex);
        item["t"] = v.time;
        item["detail"] = v.detail;
        doc.push_back(item);
    }
    return doc.dump(2) + "\n";
}

}  // namespace cts
