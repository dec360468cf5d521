from braidtrace.cli import main

if __name__ == "__main__":
    main()

#   python3 main.py trace --type A1 --braid "1 1 1"
#   python3 main.py selftest
