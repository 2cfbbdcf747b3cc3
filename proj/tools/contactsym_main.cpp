#include "contactsym/cli.hpp"

int main(int argc, char** argv) { return contactsym::cli::run_main(argc, argv); }
