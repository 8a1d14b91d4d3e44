// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#include "cfris/cli.hpp"

int main(int argc, char** argv) { return cfris::cli_main(argc, argv); }
