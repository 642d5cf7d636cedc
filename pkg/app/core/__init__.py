"""
核心模块包：配置、日志、异常与精确有理数
"""
