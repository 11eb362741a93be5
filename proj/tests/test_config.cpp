// Copyright 2026 The qpercept Authors
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


#include "qpercept/config.hpp"
#include "qpercept/errors.hpp"

#include <catch_amalgamated.hpp>

#include <limits>
#include <numbers>

using namespace qpercept;

TEST_CASE("defaults and a minimal teacher-student config")
{
    const auto c = parse_config("teacher = reuploading:2\nstudents = dissipative_qp, reuploading:2\n");
    CHECK(c.kind == ExperimentKind::TeacherStudent);
    CHECK(c.teacher == ArchitectureId::parse("reuploading:2"));
    REQUIRE(c.students.size() == 2);
    CHECK(c.students[0] == ArchitectureId{});
    CHECK(c.n_seeds == 10);
    CHECK(c.resolution == 21);
    CHECK(c.map_resolution == 51);
    CHECK(c.lo == -std::numbers::pi);
    CHECK(c.hi == std::numbers::pi);
    CHECK(c.binary);
    CHECK(c.train == TrainConfig{});
    CHECK(c.output == "out");
    const auto opt = c.experiment_options();
    CHECK(opt.n_seeds == 10);
    CHECK(opt.train == c.train);
}

TEST_CASE("comments, spacing and every key")
{
    const auto c = parse_config(R"(# toy model
experiment = teacher_student
  teacher=dissipative_qp@roth
students = qnn_two_qp ,eight_gate_qp
n_seeds = 3
resolution = 11
map_resolution = 31
lo = -1
hi = 1.5
binary = false
learning_rate = 0.01
epochs = 40
optimizer = gd
seed = 12345678901234
init_scale = 1
threads = 2
output = results/run1
)");
    CHECK(c.teacher.encoding == Encoding::RotH);
    CHECK(c.students[1] == ArchitectureId::parse("eight_gate_qp"));
    CHECK(c.n_seeds == 3);
    CHECK(c.lo == -1.0);
    CHECK(c.hi == 1.5);
    CHECK_FALSE(c.binary);
    CHECK(c.train.optimizer == Optimizer::VanillaGD);
    CHECK(c.train.seed == 12345678901234ULL);
    CHECK(c.threads == 2);
    CHECK(c.output == "results/run1");
}

TEST_CASE("print and parse round-trip")
{
    ExperimentConfig c;
    c.kind = ExperimentKind::Labelling;
    c.train.learning_rate = 0.1 + 0.2;
    c.radius = 1.0 / 3.0;
    c.n_points = 250;
    c.data_seed = 4;
    CHECK(parse_config(print_config(c)) == c);

    const auto ts = parse_config("teacher = deep_teacher4\nstudents = reuploading:2, random_deep_qp\nlo=-1\nhi=1\n");
    CHECK(parse_config(print_config(ts)) == ts);
    CHECK(print_config(parse_config(print_config(ts))) == print_config(ts));
}

TEST_CASE("shortest round-trip doubles")
{
    CHECK(format_double(0.05) == "0.05");
    CHECK(format_double(1.0) == "1");
    for (double v : {std::numbers::pi, 0.1 + 0.2, -1e-300, 123456.789}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("malformed configs are rejected")
{
    const char* bad[] = {
        "teacher = dissipative_qp\n",                                     // no students
        "students = dissipative_qp\n",                                    // no teacher
        "teacher = foo\nstudents = dissipative_qp\n",                     // unknown architecture
        "teacher = dissipative_qp\nstudents = dissipative_qp\nfoo = 1\n", // unknown key
        "teacher = dissipative_qp\nteacher = dissipative_qp\nstudents = dissipative_qp\n",
        "teacher dissipative_qp\n",
        "experiment = labelling\nepochs = 0\n",
        "experiment = labelling\nlearning_rate = -1\n",
        "experiment = labelling\nresolution = 1\n",
        "experiment = labelling\nn_seeds = two\n",
        "experiment = labelling\nbinary = maybe\n",
        "experiment = labelling\nlo = 1\nhi = -1\n",
        "experiment = quantum\n",
        "teacher = dissipative_qp\nstudents = ,\n",
    };
    for (const char* text : bad) {
        INFO(text);
        CHECK_THROWS_AS(parse_config(text), ParseError);
    }
}

TEST_CASE("other experiments need no architectures")
{
    CHECK(parse_config("experiment = encoding_pca\n").kind == ExperimentKind::EncodingPca);
    CHECK(parse_config("experiment = normalization\n").kind == ExperimentKind::Normalization);
    CHECK_THROWS_AS(parse_config(""), ParseError);
}
