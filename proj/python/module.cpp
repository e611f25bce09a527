// placeholder
int ehall_py_unused;
