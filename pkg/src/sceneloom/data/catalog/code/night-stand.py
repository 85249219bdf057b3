"""Night Stand generator (Indoors)."""

PARAMS = {
    "size": 3.252,
    "detail": 3,
    "roughness": 0.929,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Night Stand"
    for key, value in params.items():
        node[key] = value
    return node
