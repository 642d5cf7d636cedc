"""
命令行与HTTP接口包
"""
