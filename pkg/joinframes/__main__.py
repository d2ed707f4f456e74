from joinframes.cli import main

main()
