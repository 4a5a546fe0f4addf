// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 vobf contributors

int main() { return 0; }
