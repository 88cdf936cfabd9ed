# Core app package
