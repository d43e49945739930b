#include "ca/report.hpp"

#include <algorithm>

namespace ca {

std::size_t Report::passed() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const ReportCase& c) {
        return c.status == Status::Pass;
    }));
}

std::size_t Report::failed() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const ReportCase& c) {
        return c.status == Status::Fail;
    }));
}

std::size_t Report::skipped() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const ReportCase& c) {
        return c.status == Status::Skip;
    }));
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Skip: return "SKIP";
    }
    return "FAIL";
}

}  // namespace ca
