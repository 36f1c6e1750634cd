#pragma once

#include "ncgmf/bounds.hpp"
#include "ncgmf/mrbf.hpp"
#include "ncgmf/oracle.hpp"
#include "ncgmf/random_tasks.hpp"
#include "ncgmf/rbf.hpp"
#include "ncgmf/report.hpp"
#include "ncgmf/sched.hpp"
#include "ncgmf/simulator.hpp"
#include "ncgmf/step_function.hpp"
#include "ncgmf/task_io.hpp"
#include "ncgmf/task_model.hpp"
