from tkinter import *
from tkinter import ttk

self = Tk()
self.title("Login")
self.geometry("400x300")
self.configure(background="#f0f0f0")
self.resizable(True, True)

def on_sign_in(event=None):
    pass

_menubar = Menu(self, tearoff=0)
_menu1 = Menu(_menubar, tearoff=0)
_menu1.add_command(label="Open")
_menu1.add_command(label="Save")
_menu1.add_command(label="Quit")
_menubar.add_cascade(label="File", menu=_menu1)  # width=40
_menu2 = Menu(_menubar, tearoff=0)
_menubar.add_cascade(label="Help", menu=_menu2)  # width=44
self.config(menu=_menubar)

Label1 = Label(self, height=24, text="User", width=80)
Label1.place(x=20, y=20)
user_entry = Entry(self, height=24, width=160)
user_entry.place(x=120, y=20)
Label2 = Label(self, height=24, text="Password", width=80)
Label2.place(x=20, y=60)
password_entry = Entry(self, cursor="xterm", height=24, width=160)
password_entry.place(x=120, y=60)
Button1 = Button(self, command=on_sign_in, height=24, relief="raised", text="Sign in", width=80)
Button1.place(x=130, y=110)
Frame1 = Frame(self, height=120, width=360)
Frame1.place(x=20, y=160)
Checkbutton1 = Checkbutton(self, height=20, text="Remember me", width=80)
Checkbutton1.place(x=20, y=130)

password_entry.bind("<Return>", on_sign_in)

self.mainloop()
