from gaussrs.main import main

main()
