#pragma once

#include <string>
#include <vector>

namespace ca {

enum class Status { Pass, Fail, Skip };

struct ReportCase {
    std::string id;
    Status status = Status::Fail;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<ReportCase> cases;

    void add(std::string id, bool pass, std::string detail = "") {
        cases.push_back({std::move(id), pass ? Status::Pass : Status::Fail, std::move(detail)});
    }
    void skip(std::string id, std::string detail = "") {
        cases.push_back({std::move(id), Status::Skip, std::move(detail)});
    }
    void merge(const Report& o) {
        cases.insert(cases.end(), o.cases.begin(), o.cases.end());
    }

    std::size_t passed() const;
    std::size_t failed() const;
    std::size_t skipped() const;
    bool all_ok() const { return failed() == 0; }
};

const char* status_name(Status s);

}  // namespace ca
